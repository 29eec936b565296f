"""Sparse polynomials and the divided difference operators."""

from asmvar.polynomials import (
    MultiPoly,
    divided_difference,
    k_divided_difference,
    lowest_degree_part,
    nabla,
    euler,
    swap_x,
)

n = 3
x = lambda i: MultiPoly.x(n, i)
y = lambda j: MultiPoly.y(n, j)

f = (x(1) - y(1)) * (x(1) - y(2)) * (x(2) - y(1))
print("f            =", f)
print("s_1 f        =", swap_x(f, 1))
print("delta_1 f    =", divided_difference(f, 1))
print("delta_2 f    =", divided_difference(f, 2))
print("delta_1^2 f  =", divided_difference(divided_difference(f, 1), 1))

g = x(1) ** 2 * x(2)
print("pi_1(x1^2 x2)     =", k_divided_difference(g, 1))
print("pi_1 is idempotent:", k_divided_difference(k_divided_difference(g, 1), 1) == k_divided_difference(g, 1))

h = 2 * x(1) + x(2) - 2 * x(1) * x(2) - x(1) ** 2 + x(1) ** 2 * x(2)
print("h            =", h)
print("lowest part  =", lowest_degree_part(h))
print("nabla h - E h =", nabla(h) - euler(h))
print("parse(to_text) round trip:", MultiPoly.parse(n, h.to_text()) == h)
print("JSON:", h.to_json())
