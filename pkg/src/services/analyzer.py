"""Staged per-polytope analysis: hull -> facet classes -> adjacent pairs -> verdict.

Each stage inherits the failure of the stage before it; the record is then
marked invalid and the remaining stages are skipped.
"""
import logging
from collections import Counter

from src.errors import LatticeError
from src.models.lattice import LatticePoint
from src.models.scan import AnalysisRecord, PairSummary, PolytopeRecord
from src.services import hull, singularity

logger = logging.getLogger(__name__)


class StageResult:
    """Stage execution result"""
    def __init__(self, success, data, stage_name, errors=None):
        self.success = success
        self.data = data
        self.stage_name = stage_name
        self.errors = errors or []


class HullStage:
    name = "HullStage"

    def run(self, vertices):
        try:
            polytope = hull.convex_hull(vertices)
        except LatticeError as e:
            return StageResult(False, None, self.name, [str(e)])
        return StageResult(True, polytope, self.name)


class ClassificationStage:
    name = "ClassificationStage"

    def run(self, hull_result):
        if not hull_result.success:
            return StageResult(False, None, self.name, hull_result.errors)
        p = hull_result.data
        classes = [singularity.classify_facet(p, f) for f in p.facets]
        return StageResult(True, classes, self.name)


class PairStage:
    name = "PairStage"

    def run(self, hull_result, class_result):
        if not class_result.success:
            return StageResult(False, None, self.name, class_result.errors)
        p = hull_result.data
        reflexive = hull.is_reflexive(p)
        summaries = []
        pairs = singularity.find_adjacent_pairs(p, class_result.data)
        for pair in pairs:
            pairing = singularity.pairing_value(pair)
            nf = singularity.normal_form(pair)
            free_rank, torsion = singularity.class_group(nf)
            summaries.append(PairSummary(
                n=pair.n,
                pairing=pairing,
                ext_degrees=singularity.ext_profile(pair.n, pairing).degrees,
                class_group=(free_rank, tuple(torsion)),
                bundle_degrees=singularity.bundle_degrees(nf),
                dual_edge_length=(
                    hull.lattice_length(singularity.dual_edge(pair)) if reflexive else None
                ),
                facet_ids=pair.facet_ids,
            ))
        return StageResult(True, (pairs, summaries), self.name)


class VerdictStage:
    name = "VerdictStage"

    def run(self, hull_result, class_result, pair_result):
        if not pair_result.success:
            return StageResult(False, None, self.name, pair_result.errors)
        pairs, _ = pair_result.data
        v = singularity.verdict(hull_result.data, class_result.data, pairs)
        return StageResult(True, v, self.name)


class PolytopeAnalyzer:
    """Runs the stage chain for one polytope"""

    def __init__(self):
        self.hull_stage = HullStage()
        self.class_stage = ClassificationStage()
        self.pair_stage = PairStage()
        self.verdict_stage = VerdictStage()

    def analyze(self, record):
        logger.debug("[%s] polytope #%d, %d vertices", self.hull_stage.name, record.index, len(record.vertices))
        hull_result = self.hull_stage.run(record.vertices)
        record_out = AnalysisRecord(index=record.index, vertex_count=len(record.vertices))
        try:
            class_result = self.class_stage.run(hull_result)
            pair_result = self.pair_stage.run(hull_result, class_result)
            verdict_result = self.verdict_stage.run(hull_result, class_result, pair_result)
        except LatticeError as e:
            logger.warning("polytope #%d: %s", record.index, e)
            record_out.valid = False
            record_out.error = str(e)
            return record_out

        if not verdict_result.success:
            logger.info("[%s] polytope #%d rejected: %s", verdict_result.stage_name, record.index,
                        "; ".join(verdict_result.errors))
            record_out.valid = False
            record_out.error = "; ".join(verdict_result.errors)
            return record_out

        p = hull_result.data
        tally = Counter(fc.tag.value for fc in class_result.data)
        record_out.vertex_count = len(p.vertices)
        record_out.facet_count = len(p.facets)
        record_out.reflexive = hull.is_reflexive(p)
        record_out.facet_classes.update(tally)
        record_out.pairs = pair_result.data[1]
        record_out.verdict = verdict_result.data.tag.value
        return record_out


def analyze_record(record):
    return PolytopeAnalyzer().analyze(record)


def analyze_points(points, index=0):
    vertices = tuple(p if isinstance(p, LatticePoint) else LatticePoint(tuple(p)) for p in points)
    return analyze_record(PolytopeRecord(index=index, vertices=vertices))
