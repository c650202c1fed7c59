from flask import current_app

from ..errors import EhrlichError
from ..experiments import get_experiment, run_table
from .request_utils import RequestError, error_result, read_json


def table_tool(flask_request):
    """
    Reproduce rows of an experiment table; rows above MAX_API_DIGITS are refused
    """
    try:
        data = read_json(flask_request)
        exp = get_experiment(str(data.get('experiment', '')))
        rows = data.get('rows') or list(exp.table_rows)
        try:
            rows = [int(N) for N in rows]
        except (TypeError, ValueError):
            raise RequestError('rows must be a list of integers')
        limit = current_app.config['MAX_API_DIGITS']
        for N in rows:
            if exp.digits_for(N) > limit:
                raise RequestError(f"row N={N} needs {exp.digits_for(N)} digits (limit {limit})")
        table = run_table(exp, rows)
    except EhrlichError as e:
        return error_result(e)
    return {'ok': True, 'experiment': exp.name, 'rows': [row.formatted() for row in table]}
