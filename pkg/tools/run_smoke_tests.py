import sys, os
# Ensure project root on path so the ehrlich package can be imported when running this script
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))
from ehrlich.app import create_app

app = create_app()

# Use Flask test client
with app.test_client() as client:
    print('1) /api/health')
    r = client.get('/api/health')
    print('status', r.status_code)
    print(r.get_json())
    print('\n---\n')

    print('2) /api/experiments')
    r = client.get('/api/experiments')
    print('status', r.status_code)
    for exp in (r.get_json() or {}).get('experiments', []):
        print(exp['name'], exp['degree'], exp['threshold'])
    print('\n---\n')

    print('3) /api/certify (quartic start, expect not certified)')
    r = client.post('/api/certify', json={'experiment': 'ex71', 'digits': 50})
    print('status', r.status_code)
    print(r.get_json())
    print('\n---\n')

    print('4) /api/solve (z^2 - 1 from (2, -2), N=2)')
    poly = {'degree': 2, 'coeffs': ['1', '0', '0', '0', '-1', '0']}
    r = client.post('/api/solve', json={'poly': poly, 'x': [['2', '0'], ['-2', '0']], 'order': 2, 'digits': 60})
    print('status', r.status_code)
    report = (r.get_json() or {}).get('report', {})
    print({key: report.get(key) for key in ('status', 'm', 'k', 'eps_k', 'eps_k1')})
    print('\n---\n')

    print('5) /api/table (quartic rows 1-2)')
    r = client.post('/api/table', json={'experiment': 'ex71', 'rows': [1, 2]})
    print('status', r.status_code)
    print(r.get_json())
    print('\n---\n')

    print('6) /api/solve with bad order (expect 400)')
    r = client.post('/api/solve', json={'experiment': 'ex71', 'order': 0})
    print('status', r.status_code)
    print(r.get_json())
    print('\n---\n')

    print('Smoke tests completed')
