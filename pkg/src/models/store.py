import json
from datetime import datetime

from flask_sqlalchemy import SQLAlchemy

db = SQLAlchemy()


class ScanRun(db.Model):
    __tablename__ = 'scan_runs'

    id = db.Column(db.Integer, primary_key=True)
    label = db.Column(db.String(200), nullable=False, default='upload')
    total = db.Column(db.Integer, nullable=False, default=0)
    reflexive_count = db.Column(db.Integer, nullable=False, default=0)
    not_smoothable_count = db.Column(db.Integer, nullable=False, default=0)
    invalid_count = db.Column(db.Integer, nullable=False, default=0)
    created_at = db.Column(db.DateTime, default=datetime.utcnow)

    entries = db.relationship('ScanEntry', backref='scan_run', lazy=True,
                              order_by='ScanEntry.record_index', cascade='all, delete-orphan')

    @classmethod
    def from_report(cls, report, label='upload'):
        run = cls(
            label=label,
            total=report.total,
            reflexive_count=report.reflexive_count,
            not_smoothable_count=report.not_smoothable_count,
            invalid_count=report.invalid_count,
        )
        run.entries = [ScanEntry.from_record(r) for r in report.records]
        return run

    def to_dict(self, with_entries=False, verdict=None):
        data = {
            'id': self.id,
            'label': self.label,
            'total': self.total,
            'reflexive': self.reflexive_count,
            'not_smoothable': self.not_smoothable_count,
            'invalid': self.invalid_count,
            'created_at': self.created_at.isoformat() if self.created_at else None,
        }
        if with_entries:
            data['records'] = [
                e.to_dict() for e in self.entries if verdict is None or e.verdict == verdict
            ]
        return data


class ScanEntry(db.Model):
    __tablename__ = 'scan_entries'

    id = db.Column(db.Integer, primary_key=True)
    scan_id = db.Column(db.Integer, db.ForeignKey('scan_runs.id'), nullable=False)
    record_index = db.Column(db.Integer, nullable=False)
    verdict = db.Column(db.String(30))  # not_smoothable, no_obstruction_found, already_smooth
    reflexive = db.Column(db.Boolean, default=False)
    valid = db.Column(db.Boolean, default=True)
    payload = db.Column(db.Text, nullable=False)  # JSON of the AnalysisRecord

    @classmethod
    def from_record(cls, record):
        return cls(
            record_index=record.index,
            verdict=record.verdict,
            reflexive=record.reflexive,
            valid=record.valid,
            payload=json.dumps(record.to_dict(), separators=(',', ':')),
        )

    def to_dict(self):
        return json.loads(self.payload)
