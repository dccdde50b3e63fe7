import io

from flask import Blueprint, current_app, jsonify, request

from src.errors import LatticeError
from src.models.store import ScanRun, db
from src.services.ks_ingest import parse_palp, scan

scans_bp = Blueprint('scans', __name__)


@scans_bp.route('/scans', methods=['POST'])
def create_scan():
    """Scan an uploaded PALP file and store the report"""
    try:
        data = request.get_json(silent=True)
        if isinstance(data, dict):
            text, label = data.get('palp', ''), data.get('label')
        else:
            text, label = request.get_data(as_text=True), request.args.get('label')

        records = list(parse_palp(io.StringIO(text)))
        report = scan(records, current_app.config.get('SCAN_PARALLELISM', 1))
    except LatticeError as e:
        return jsonify({"error": str(e)}), 400

    try:
        run = ScanRun.from_report(report, label=label or 'upload')
        db.session.add(run)
        db.session.commit()
    except Exception as e:
        db.session.rollback()
        return jsonify({"error": str(e)}), 500

    return jsonify(run.to_dict()), 201


@scans_bp.route('/scans', methods=['GET'])
def list_scans():
    """List stored scans, newest first"""
    runs = ScanRun.query.order_by(ScanRun.id.desc()).all()
    return jsonify([run.to_dict() for run in runs])


@scans_bp.route('/scans/<int:scan_id>', methods=['GET'])
def get_scan(scan_id):
    """One stored scan with its records"""
    run = db.session.get(ScanRun, scan_id)
    if not run:
        return jsonify({"error": "Scan not found"}), 404
    return jsonify(run.to_dict(with_entries=True, verdict=request.args.get('verdict')))
