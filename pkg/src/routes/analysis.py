from flask import Blueprint, jsonify, request

from src.errors import LatticeError
from src.models.lattice import LatticePoint
from src.services import singularity
from src.services.analyzer import analyze_points
from src.services.hull import convex_hull

analysis_bp = Blueprint('analysis', __name__)


def _vertices(data):
    vertices = (data or {}).get('vertices')
    if not isinstance(vertices, list) or not all(isinstance(v, list) for v in vertices):
        raise ValueError("'vertices' must be an array of 3-integer arrays")
    return [LatticePoint(tuple(v)) for v in vertices]


@analysis_bp.route('/analyze', methods=['POST'])
def analyze():
    """Analyze one polytope given by its vertices"""
    try:
        vertices = _vertices(request.get_json(silent=True))
        convex_hull(vertices)
    except (ValueError, LatticeError) as e:
        return jsonify({"error": str(e)}), 400

    return jsonify(analyze_points(vertices).to_dict())


@analysis_bp.route('/normal-form', methods=['POST'])
def normal_form():
    """Normal form data of the adjacent A_n pairs of one polytope"""
    data = request.get_json(silent=True) or {}
    try:
        polytope = convex_hull(_vertices(data))
    except (ValueError, LatticeError) as e:
        return jsonify({"error": str(e)}), 400

    pairs = singularity.find_adjacent_pairs(polytope)
    if not pairs:
        return jsonify({"error": "no adjacent A_n pairs"}), 422

    selector = data.get('pair')
    if selector is not None and (
        isinstance(selector, bool) or not isinstance(selector, int) or not 0 <= selector < len(pairs)
    ):
        return jsonify({"error": f"pair must be an index in 0..{len(pairs) - 1}"}), 400

    result = []
    for k in (range(len(pairs)) if selector is None else [selector]):
        pair = pairs[k]
        nf = singularity.normal_form(pair)
        free_rank, torsion = singularity.class_group(nf)
        result.append({
            'pair': k,
            **pair.to_dict(),
            'normal_form': nf.to_dict(),
            'kernel': list(singularity.ray_map_kernel(nf)),
            'class_group': {'free_rank': free_rank, 'torsion': torsion},
            'ext_degrees': list(singularity.ext_profile(pair.n, pair.pairing).degrees),
        })
    return jsonify(result)
