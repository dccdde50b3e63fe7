from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from src.models.lattice import LatticePoint

FACET_TAG_KEYS = ('smooth', 'an_triangle', 'other')


@dataclass(frozen=True)
class PolytopeRecord:
    index: int
    vertices: Tuple[LatticePoint, ...]
    source_header: str = ''


@dataclass(frozen=True)
class PairSummary:
    n: int
    pairing: int
    ext_degrees: Tuple[int, ...]
    class_group: Tuple[int, Tuple[int, ...]]
    bundle_degrees: Tuple[int, int, int]
    dual_edge_length: Optional[int]
    facet_ids: Tuple[int, int]

    @property
    def almost_flat(self):
        return self.pairing == 0

    def to_dict(self):
        free_rank, torsion = self.class_group
        return {
            'n': self.n,
            'facet_ids': list(self.facet_ids),
            'pairing': self.pairing,
            'almost_flat': self.almost_flat,
            'ext_degrees': list(self.ext_degrees),
            'class_group': {'free_rank': free_rank, 'torsion': list(torsion)},
            'bundle_degrees': list(self.bundle_degrees),
            'dual_edge_length': self.dual_edge_length,
        }


@dataclass
class AnalysisRecord:
    index: int
    vertex_count: int
    facet_count: int = 0
    reflexive: bool = False
    facet_classes: Dict[str, int] = field(default_factory=lambda: dict.fromkeys(FACET_TAG_KEYS, 0))
    pairs: List[PairSummary] = field(default_factory=list)
    verdict: Optional[str] = None
    valid: bool = True
    error: Optional[str] = None

    @property
    def not_smoothable(self):
        return self.valid and self.verdict == 'not_smoothable'

    def to_dict(self):
        return {
            'index': self.index,
            'valid': self.valid,
            'vertex_count': self.vertex_count,
            'facet_count': self.facet_count,
            'reflexive': self.reflexive,
            'facet_classes': {k: self.facet_classes.get(k, 0) for k in FACET_TAG_KEYS},
            'pairs': [p.to_dict() for p in self.pairs],
            'verdict': self.verdict,
            'error': self.error,
        }


@dataclass
class ScanReport:
    total: int
    reflexive_count: int
    not_smoothable_count: int
    invalid_count: int
    records: List[AnalysisRecord]

    @classmethod
    def from_records(cls, records):
        records = sorted(records, key=lambda r: r.index)
        return cls(
            total=len(records),
            reflexive_count=sum(1 for r in records if r.valid and r.reflexive),
            not_smoothable_count=sum(1 for r in records if r.not_smoothable),
            invalid_count=sum(1 for r in records if not r.valid),
            records=records,
        )

    def summary(self):
        return {
            'total': self.total,
            'reflexive': self.reflexive_count,
            'not_smoothable': self.not_smoothable_count,
            'invalid': self.invalid_count,
        }

    def summary_line(self):
        return f"total={self.total}, reflexive={self.reflexive_count}, not_smoothable={self.not_smoothable_count}"
