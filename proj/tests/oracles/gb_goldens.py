#!/usr/bin/env python3
"""Regenerates the Groebner-basis golden files under tests/golden/.

Run from the repository root:  python3 tests/oracles/gb_goldens.py
The goldens come from an independent CAS (sympy) so the C++ engine is never
checked against itself.
"""
import sympy as sp

def fmt(expr):
    s = sp.sstr(sp.expand(expr), order='grevlex')
    return s.replace('**', '^').replace(' ', '')

def write_basis(path, polys, gens, order):
    G = sp.groebner(polys, *gens, order=order)
    lines = [fmt(g) for g in G.exprs]
    with open(path, 'w') as f:
        f.write('\n'.join(lines) + '\n')
    print(path, len(lines), 'elements')

a, b, c, d, e = sp.symbols('a b c d e')

# dim-2 quotient with three-step colon filtration; degrevlex a>b>c>d
write_basis('tests/golden/gb_filtration_ring_degrevlex.txt',
            [a*c, a*d, a*b - b*d, a**2 + b*c, b**2],
            (a, b, c, d), 'grevlex')

# lift whose initial ideal matches a 5-variable quadratic monomial ideal;
# degrevlex with priority e>d>b>c>a
write_basis('tests/golden/gb_lift_degrevlex_edbca.txt',
            [a**2 - b*c + b*e, d**2, c*d, b**2 + e*b, a*c, a*b + a*e],
            (e, d, b, c, a), 'grevlex')

# normal form witness: remainder of a*b against the first basis
G = sp.groebner([a*c, a*d, a*b - b*d, a**2 + b*c, b**2], a, b, c, d, order='grevlex')
_, r = G.reduce(a*b)
with open('tests/golden/nf_ab_filtration_ring.txt', 'w') as f:
    f.write(fmt(r) + '\n')
print('tests/golden/nf_ab_filtration_ring.txt ->', fmt(r))
