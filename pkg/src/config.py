import logging
import os
import tempfile
from dataclasses import dataclass
from typing import Optional

from dotenv import load_dotenv

LOG_FORMAT = '%(asctime)s - %(levelname)s - %(name)s - %(message)s'


@dataclass(frozen=True)
class Settings:
    ks_db_path: Optional[str]
    database_url: str
    scan_parallelism: int
    log_level: str
    port: int


def _database_url():
    database_url = os.getenv('DATABASE_URL')
    if database_url:
        # Render hands out postgres:// URLs, SQLAlchemy wants postgresql://
        if database_url.startswith('postgres://'):
            database_url = database_url.replace('postgres://', 'postgresql://', 1)
        return database_url
    return f"sqlite:///{os.path.join(tempfile.gettempdir(), 'obstruction_scans.db')}"


def load_settings():
    load_dotenv()
    return Settings(
        ks_db_path=os.getenv('KS_DB_PATH') or None,
        database_url=_database_url(),
        scan_parallelism=int(os.getenv('SCAN_PARALLELISM', os.cpu_count() or 1)),
        log_level=os.getenv('LOG_LEVEL', 'INFO').upper(),
        port=int(os.getenv('PORT', 10000)),
    )


def configure_logging(level='INFO'):
    # stderr only; stdout carries reports
    logging.basicConfig(level=getattr(logging, str(level).upper(), logging.INFO), format=LOG_FORMAT)
