from ..config import SOLVER_CONFIG
from ..errors import EhrlichError
from ..numerics.apcx import PrecisionContext, format_fixed, format_sci
from ..numerics.metrics import GaugeParams
from ..numerics.solver import certify_semilocal
from .request_utils import error_result, problem_from, read_json, request_digits


def certify_tool(flask_request):
    """
    Check the semilocal condition for a start vector without iterating
    """
    places = SOLVER_CONFIG['table_digits']
    try:
        data = read_json(flask_request)
        ctx = PrecisionContext.from_digits(request_digits(data), SOLVER_CONFIG['precision_headroom'])
        f, x = problem_from(data, ctx)
        params = GaugeParams.build(f.degree, str(data.get('p', 'inf')), ctx)
        cert = certify_semilocal(f, x, params, ctx)
    except EhrlichError as e:
        return error_result(e)
    return {
        'ok': True,
        'certified': cert.certified,
        'Ef': format_fixed(cert.Ef, places, truncate=True),
        'threshold': format_fixed(cert.threshold, places),
        'eps': None if cert.eps is None else format_sci(cert.eps, places),
    }
