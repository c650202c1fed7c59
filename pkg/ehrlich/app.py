import json

from flask import Flask, jsonify, request
from flask_cors import CORS
from mpmath.libmp import BACKEND

from .config import Config
from .errors import EhrlichError
from .experiments import builtin_experiments
from .tools.certify_tool import certify_tool
from .tools.solve_tool import solve_tool
from .tools.table_tool import table_tool
from .utils import log_event


def create_app():
    app = Flask(__name__)
    app.config.from_object(Config)
    app.json.sort_keys = app.config['JSON_SORT_KEYS']
    CORS(app, resources={r"/api/*": {"origins": "*"}})

    @app.get('/api/health')
    def api_health():
        return jsonify({'ok': True, 'backend': BACKEND})

    @app.get('/api/experiments')
    def api_experiments():
        try:
            listing = [exp.to_json() for exp in builtin_experiments()]
        except EhrlichError as e:
            return jsonify({'ok': False, 'error': str(e)}), 500
        return jsonify({'ok': True, 'experiments': listing})

    @app.post('/api/certify')
    def api_certify():
        result = certify_tool(request)
        _log_tool('certify', request, result)
        return _respond(result)

    @app.post('/api/solve')
    def api_solve():
        result = solve_tool(request)
        _log_tool('solve', request, result)
        return _respond(result)

    @app.post('/api/table')
    def api_table():
        result = table_tool(request)
        _log_tool('table', request, result)
        return _respond(result)

    def _respond(result):
        if result.get('ok'):
            return jsonify(result)
        return jsonify(result), 400

    def _log_tool(tool_name, req, result):
        summary = {'ok': result.get('ok'), 'error': result.get('error')}
        log_event(f"input={_safe_str(req.get_json(silent=True) or {})} result={_safe_str(summary)}",
                  tool_name=tool_name)

    def _safe_str(obj):
        try:
            return json.dumps(obj, ensure_ascii=False)[:500]
        except (TypeError, ValueError):
            return str(obj)[:500]

    return app
