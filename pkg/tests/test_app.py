import pytest

from ehrlich.app import create_app


@pytest.fixture
def client():
    app = create_app()
    app.config.update(TESTING=True, MAX_API_DIGITS=400)
    return app.test_client()


QUARTIC_POLY = {"degree": 4, "coeffs": ["1", "0", "0", "0", "0", "0", "0", "0", "-1", "0"]}
QUARTIC_X0 = [["0.5", "0.5"], ["-1.36", "0.42"], ["-0.25", "1.28"], ["0.46", "-1.37"]]


def test_health(client):
    res = client.get('/api/health')
    assert res.status_code == 200
    assert res.get_json()['ok'] is True


def test_experiments_listing(client):
    data = client.get('/api/experiments').get_json()
    assert [e['name'] for e in data['experiments']] == ['ex71', 'ex72', 'ex73', 'ex74']
    assert data['experiments'][0]['threshold'] == '0.125000'
    assert data['experiments'][2]['aliases'] == ['wilkinson20']


def test_certify_accepts_alias(client):
    data = client.post('/api/certify', json={'experiment': 'unity40', 'digits': 40}).get_json()
    assert data['ok'] is True and data['Ef'] == '0.159318'


def test_certify_experiment_start(client):
    res = client.post('/api/certify', json={'experiment': 'ex71', 'digits': 40})
    assert res.status_code == 200
    data = res.get_json()
    assert data == {'ok': True, 'certified': False, 'Ef': '0.506619', 'threshold': '0.125000', 'eps': None}


def test_certify_quadratic(client):
    body = {'poly': {"degree": 2, "coeffs": ["1", "0", "0", "0", "-1", "0"]}, 'x': ['2', '-2']}
    data = client.post('/api/certify', json=body).get_json()
    assert data['certified'] is True
    assert data['Ef'] == '0.187500'
    assert data['eps'] == '1.000000e+0'


def test_solve_with_explicit_start(client):
    body = {'poly': QUARTIC_POLY, 'x': QUARTIC_X0, 'order': 2, 'digits': 60}
    res = client.post('/api/solve', json=body)
    assert res.status_code == 200
    report = res.get_json()['report']
    assert report['status'] == 'Converged'
    assert (report['m'], report['k']) == (1, 3)
    assert report['eps_k'].startswith('1.347') and report['eps_k'].endswith('e-38')


def test_solve_with_aberth_start(client):
    body = {'poly': {"degree": 2, "coeffs": ["1", "0", "0", "0", "-1", "0"]},
            'aberth': {'a1': '0', 'r0': '2'}, 'digits': 30}
    report = client.post('/api/solve', json=body).get_json()['report']
    assert report['status'] == 'Converged'


@pytest.mark.parametrize('body, fragment', [
    ({'experiment': 'ex71', 'order': 0}, 'order must be between'),
    ({'experiment': 'ex71', 'digits': 5000}, 'digits must be between'),
    ({'experiment': 'nope'}, 'unknown experiment'),
    ({'poly': QUARTIC_POLY}, 'poly needs x or aberth'),
    ({}, 'experiment or poly is required'),
    ({'experiment': 'ex71', 'p': '0.5'}, 'p must be >= 1'),
])
def test_solve_rejects_bad_requests(client, body, fragment):
    res = client.post('/api/solve', json=body)
    assert res.status_code == 400
    data = res.get_json()
    assert data['ok'] is False
    assert fragment in data['error']


def test_body_must_be_json(client):
    res = client.post('/api/solve', data='x', content_type='text/plain')
    assert res.status_code == 400
    assert res.get_json()['error'] == 'JSON object body is required'


def test_table_rows(client):
    data = client.post('/api/table', json={'experiment': 'ex71', 'rows': [1, 2]}).get_json()
    assert data['ok'] and data['experiment'] == 'ex71'
    assert [row['m'] for row in data['rows']] == ['2', '1']
    eps_k = data['rows'][0]['eps_k']
    assert eps_k.startswith('4.385') and eps_k.endswith('e-21')


def test_table_refuses_rows_above_limit(client):
    res = client.post('/api/table', json={'experiment': 'ex71', 'rows': [10]})
    assert res.status_code == 400
    assert 'needs 2743 digits' in res.get_json()['error']


def test_cors_header_on_api(client):
    res = client.get('/api/health', headers={'Origin': 'http://example.org'})
    assert res.headers.get('Access-Control-Allow-Origin') == '*'
