import math

# (s, n_eff, L, B_strict)
STRICT_VALUES = [
    (1, 1.0, 1, 0.5),
    (1, 1.5, 2, 0.7113248654),
    (1, 2.0, 3, 0.9226497308),
    (2, 3.0, 3, 0.7939887),
    (3, 1.0, 1, 0.5),
]


def approx_value(s, n_eff, l_tilde):
    return (s, n_eff, l_tilde, (s + 2 * l_tilde) / (2 * (s + 2)))


# (s, n_eff, L_tilde, B_approx)
APPROX_VALUES = [
    approx_value(1, 1.0, 1.0),
    approx_value(1, 1.5, (1 + math.sqrt(5)) / 2),
    approx_value(1, 2.0, (5 + math.sqrt(73)) / 6),
]

ASYMPTOTIC_PACKING = {1: 8.0 / 9.0, 2: 0.75, 3: 0.6144}
