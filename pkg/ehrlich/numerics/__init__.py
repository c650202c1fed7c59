# Numerical core: arithmetic, polynomials, norms, gauges, operators and the solver
