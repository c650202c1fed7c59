from ..config import SOLVER_CONFIG
from ..errors import EhrlichError
from ..numerics.solver import SolveConfig, solve
from .request_utils import bounded_int, error_result, problem_from, read_json, request_digits


def solve_tool(flask_request):
    """
    Run the certified iteration and return the full report
    """
    try:
        data = read_json(flask_request)
        cfg = SolveConfig.from_digits(
            request_digits(data),
            N=bounded_int(data, 'order', 1, 'MAX_API_ORDER'),
            pnorm=str(data.get('p', 'inf')),
            stop_eps=str(data.get('stop_eps', SOLVER_CONFIG['stop_eps'])),
            max_iter=bounded_int(data, 'max_iter', SOLVER_CONFIG['max_iter'], 'MAX_API_ITER'),
        )
        f, x0 = problem_from(data, cfg.context())
        report = solve(f, x0, cfg)
    except EhrlichError as e:
        return error_result(e)
    return {'ok': True, 'report': report.to_json(SOLVER_CONFIG['iterate_digits'] + 5)}
