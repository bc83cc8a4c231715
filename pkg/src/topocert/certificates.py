"""Non-homeomorphism certificates.

A certificate records a fingerprint realized by a cover on one side that is
absent from the exhaustively enumerated cover family of the other side, for
some fixed cover size.  Since homeomorphic spaces realize identical
fingerprint sets at every size, such an absence rules the homeomorphism out.
Certificates carry enough data to be replayed from scratch.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Tuple, Union

from . import __version__ as _version
from .arrangements import (
    DEFAULT_COVER_SIZE_CAP,
    AxisAlignedSpec,
    FullLine,
    IntervalSpec,
    Segment,
    hclasses_axis2d,
    hclasses_of_intervals,
)
from .digraphs import DEFAULT_VERTEX_CAP
from .errors import NotExhaustible
from .fingerprints import (
    collect_fingerprints,
    fingerprint_of,
    fingerprints_of_domain,
    fingerprints_of_space,
)
from .spaces import FiniteSpace


@dataclass(frozen=True)
class SpaceSide:
    """A finite space: its covers of any size are exhaustively enumerable."""

    name: str
    space: FiniteSpace


@dataclass(frozen=True)
class DomainSide:
    """A segment or line: n-interval cover types are exhaustively enumerable."""

    name: str
    domain: Union[Segment, FullLine]


@dataclass(frozen=True)
class WitnessSide:
    """Specific covers only; can witness a fingerprint but never absence."""

    name: str
    covers: tuple  # of IntervalSpec | AxisAlignedSpec


Side = Union[SpaceSide, DomainSide, WitnessSide]


@dataclass(frozen=True)
class Certificate:
    verdict: str
    level: str
    n: int
    witness_side: str
    witness_fingerprint: dict
    witness_cover: Optional[dict]
    exhaustive_side: dict
    listings: dict
    caps: dict
    version: str

    def to_json(self) -> dict:
        return {
            "verdict": self.verdict,
            "level": self.level,
            "n": self.n,
            "witness_side": self.witness_side,
            "witness_fingerprint": self.witness_fingerprint,
            "witness_cover": self.witness_cover,
            "exhaustive_side": self.exhaustive_side,
            "listings": self.listings,
            "caps": self.caps,
            "version": self.version,
        }


def _witness_cover_json(spec) -> dict:
    # local import: jsonio depends on this module's types
    from .jsonio import axis_spec_json, interval_spec_json

    if isinstance(spec, AxisAlignedSpec):
        return axis_spec_json(spec)
    return interval_spec_json(spec)


def _cover_size(spec) -> int:
    return len(spec.members)


def _side_fingerprints(side: Side, n: int, level: str, cap_cover: int,
                       cap_vertices: int):
    """(FingerprintSet, exhaustive?, family description, witness specs)."""
    if isinstance(side, SpaceSide):
        fs = fingerprints_of_space(side.space, n, level, cap_vertices)
        family = f"all {n}-member covers of a {len(side.space.points)}-point space"
        return fs, True, family, None
    if isinstance(side, DomainSide):
        fs = fingerprints_of_domain(side.domain, n, level, cap_cover, cap_vertices)
        family = f"all combinatorial types of {n}-interval covers of the {side.domain.describe()}"
        return fs, True, family, None
    specs = [s for s in side.covers if _cover_size(s) == n]
    fps = []
    for spec in specs:
        partition = (
            hclasses_axis2d(spec)
            if isinstance(spec, AxisAlignedSpec)
            else hclasses_of_intervals(spec)
        )
        fps.append(fingerprint_of(partition, cap_vertices))
    fs = collect_fingerprints(fps, level, n)
    return fs, False, f"{len(specs)} witness cover(s)", specs


def nonhomeo_certificate(side_a: Side, side_b: Side, n_range: Tuple[int, int],
                         level: str = "graph",
                         cap_cover: int = DEFAULT_COVER_SIZE_CAP,
                         cap_vertices: int = DEFAULT_VERTEX_CAP
                         ) -> Optional[Certificate]:
    """Search cover sizes in ``n_range`` (inclusive) for a fingerprint on one
    side that the other side's exhaustive enumeration never realizes.

    At least one side must be exhaustible; a witness-only side can only
    supply the distinguishing fingerprint.  Returns None when nothing in the
    range separates the sides.
    """
    if isinstance(side_a, WitnessSide) and isinstance(side_b, WitnessSide):
        raise NotExhaustible(side_b.name)
    lo, hi = n_range
    if lo < 1 or hi < lo:
        raise ValueError("n_range must be 1 <= lo <= hi")
    caps = {"cap_cover": cap_cover, "cap_vertices": cap_vertices}
    for n in range(lo, hi + 1):
        fa, ea, fam_a, specs_a = _side_fingerprints(
            side_a, n, level, cap_cover, cap_vertices)
        fb, eb, fam_b, specs_b = _side_fingerprints(
            side_b, n, level, cap_cover, cap_vertices)
        for (fs_w, name_w, specs_w), (fs_e, ex_e, name_e, fam_e) in (
            ((fa, side_a.name, specs_a), (fb, eb, side_b.name, fam_b)),
            ((fb, side_b.name, specs_b), (fa, ea, side_a.name, fam_a)),
        ):
            if not ex_e:
                continue
            present = set(fs_e.elements)
            for idx, key in enumerate(fs_w.elements):
                if key in present:
                    continue
                witness_cover = None
                if specs_w is not None:
                    # recover which witness cover produced this key
                    for spec in specs_w:
                        partition = (
                            hclasses_axis2d(spec)
                            if isinstance(spec, AxisAlignedSpec)
                            else hclasses_of_intervals(spec)
                        )
                        fp = fingerprint_of(partition, cap_vertices)
                        if fp.project(level) == key:
                            witness_cover = _witness_cover_json(spec)
                            break
                return Certificate(
                    verdict="not_homeomorphic",
                    level=level,
                    n=n,
                    witness_side=name_w,
                    witness_fingerprint=fs_w.details[idx],
                    witness_cover=witness_cover,
                    exhaustive_side={
                        "name": name_e,
                        "family": fam_e,
                        "fingerprint_count": len(fs_e.elements),
                    },
                    listings={
                        side_a.name: fa.to_json(),
                        side_b.name: fb.to_json(),
                    },
                    caps=caps,
                    version=_version,
                )
    return None


def verify_certificate(cert: Certificate, side_a: Side, side_b: Side) -> bool:
    """Replay the certificate's enumerations and confirm the verdict."""
    caps = cert.caps
    fa, ea, _, _ = _side_fingerprints(
        side_a, cert.n, cert.level, caps["cap_cover"], caps["cap_vertices"])
    fb, eb, _, _ = _side_fingerprints(
        side_b, cert.n, cert.level, caps["cap_cover"], caps["cap_vertices"])
    by_name = {side_a.name: (fa, ea), side_b.name: (fb, eb)}
    if cert.witness_side not in by_name:
        return False
    fs_w, _ = by_name[cert.witness_side]
    other = side_b.name if cert.witness_side == side_a.name else side_a.name
    fs_e, ex_e = by_name[other]
    if not ex_e:
        return False
    witness_keys = [
        k for k, d in zip(fs_w.elements, fs_w.details)
        if d == cert.witness_fingerprint
    ]
    if len(witness_keys) != 1:
        return False
    return witness_keys[0] not in set(fs_e.elements)
