import os
import sys
# DON'T CHANGE THIS !!!
sys.path.insert(0, os.path.dirname(os.path.dirname(__file__)))

from flask import Flask, jsonify
from flask_cors import CORS

from src.config import configure_logging, load_settings
from src.models.store import db
from src.routes.analysis import analysis_bp
from src.routes.scans import scans_bp


def create_app(overrides=None):
    settings = load_settings()
    configure_logging(settings.log_level)

    app = Flask(__name__)
    app.config['SQLALCHEMY_DATABASE_URI'] = settings.database_url
    app.config['SQLALCHEMY_TRACK_MODIFICATIONS'] = False
    # uploads are scanned inside the request; keep gunicorn's single worker single-process
    app.config['SCAN_PARALLELISM'] = 1
    app.config.update(overrides or {})

    # Enable CORS for all routes
    CORS(app)

    app.register_blueprint(analysis_bp, url_prefix='/api')
    app.register_blueprint(scans_bp, url_prefix='/api')

    @app.route('/')
    def index():
        return jsonify({
            "service": "A_n-triangle smoothability obstruction analyzer",
            "endpoints": [
                "POST /api/analyze",
                "POST /api/normal-form",
                "POST /api/scans",
                "GET /api/scans",
                "GET /api/scans/<id>",
            ],
        })

    db.init_app(app)
    with app.app_context():
        db.create_all()

    return app


if __name__ == '__main__':
    # Use PORT environment variable for Render
    port = int(os.environ.get('PORT', 5000))
    create_app().run(host='0.0.0.0', port=port, debug=False)
