"""Shared request parsing for the API tool handlers."""
from flask import current_app

from ..config import default_digits
from ..errors import EhrlichError
from ..experiments import aberth_init, get_experiment
from ..export import parse_vector
from ..numerics.apcx import PrecisionContext
from ..numerics.polynomial import Polynomial


class RequestError(EhrlichError, ValueError):
    """The request body is missing a field or exceeds a configured limit."""


def read_json(flask_request) -> dict:
    data = flask_request.get_json(silent=True)
    if not isinstance(data, dict):
        raise RequestError('JSON object body is required')
    return data


def bounded_int(data: dict, key: str, default: int, limit_key: str, minimum: int = 1) -> int:
    raw = data.get(key, default)
    try:
        value = int(raw)
    except (TypeError, ValueError):
        raise RequestError(f"{key} must be an integer")
    limit = current_app.config[limit_key]
    if value < minimum or value > limit:
        raise RequestError(f"{key} must be between {minimum} and {limit}")
    return value


def request_digits(data: dict) -> int:
    return bounded_int(data, 'digits', default_digits(), 'MAX_API_DIGITS', minimum=20)


def problem_from(data: dict, ctx: PrecisionContext):
    """(polynomial, start vector) from {"experiment"} or {"poly", "x" | "aberth"}."""
    if data.get('experiment'):
        exp = get_experiment(str(data['experiment']))
        return exp.polynomial, exp.initial(ctx)
    if 'poly' not in data:
        raise RequestError('experiment or poly is required')
    f = Polynomial.from_json(data['poly'])
    if 'x' in data:
        return f, ctx.vector(parse_vector(data['x']))
    aberth = data.get('aberth')
    if isinstance(aberth, dict) and 'r0' in aberth:
        return f, aberth_init(f.degree, ctx.complex(str(aberth.get('a1', '0'))), str(aberth['r0']), ctx)
    raise RequestError('poly needs x or aberth {"a1", "r0"}')


def error_result(e: Exception) -> dict:
    return {'ok': False, 'error': str(e)}
