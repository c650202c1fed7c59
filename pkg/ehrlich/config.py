import os

from dotenv import load_dotenv

from .errors import ConfigError

# Paths used by the application
BASE_DIR = os.path.dirname(os.path.abspath(__file__))
PROJECT_ROOT = os.path.abspath(os.path.join(BASE_DIR, os.pardir))

load_dotenv(os.path.join(PROJECT_ROOT, '.env'))


class Config:
    """Central configuration for the Flask app.

    Note: This module should only define configuration and constants.
    The Flask app factory and its routes live in ehrlich/app.py.
    """

    SECRET_KEY = os.environ.get('SECRET_KEY', 'dev-secret-key')
    JSON_SORT_KEYS = False
    # Upper limits for a single API request; the CLI has none.
    MAX_API_DIGITS = int(os.environ.get('MAX_API_DIGITS', 3000))
    MAX_API_ORDER = int(os.environ.get('MAX_API_ORDER', 30))
    MAX_API_ITER = int(os.environ.get('MAX_API_ITER', 100))


# Solver defaults (tunable)
SOLVER_CONFIG = {
    "default_digits": 100,
    "stop_eps": "1e-15",
    "max_iter": 200,
    "precision_headroom": 1.2,
    "table_digits": 6,       # E_f decimals and bound mantissas
    "iterate_digits": 15,    # iterate listing
    "reference_factor": 4,
    "extra_iterate_factor": 2,   # bits multiplier when measuring the iterate past k
    "plan_padding_digits": 60,
    "workers": 1,
}


def _env_int(name: str, fallback: int, minimum: int = 1) -> int:
    raw = os.environ.get(name, '').strip()
    if not raw:
        return fallback
    try:
        value = int(raw)
    except ValueError:
        raise ConfigError(f"{name} must be an integer, got {raw!r}")
    if value < minimum:
        raise ConfigError(f"{name} must be >= {minimum}, got {value}")
    return value


def default_digits() -> int:
    """Working precision in decimal digits; EHRLICH_DEFAULT_DIGITS overrides."""
    return _env_int('EHRLICH_DEFAULT_DIGITS', SOLVER_CONFIG['default_digits'], minimum=20)


def default_workers() -> int:
    return _env_int('EHRLICH_WORKERS', SOLVER_CONFIG['workers'])
