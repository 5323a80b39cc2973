"""Independent reference values for the C++ tests.

Everything here uses mpmath directly: q-Pochhammer symbols via mpmath.qp,
series by plain term-by-term summation with explicit products (no term-ratio
recurrences), and q -> 1 limits term by term. Run once; the printed values are
frozen into the test sources.
"""

from mpmath import mp, mpf, qp, nsum, inf, pi, sqrt, sin, rf, factorial

mp.dps = 110


def qpinf(a, q):
    return qp(a, q)


def qpn(a, q, n):
    return qp(a, q, n)


def direct_sum(term, tol_digits=100, kmax=20000):
    s = mpf(0)
    small = 0
    for k in range(kmax):
        t = term(k)
        s += t
        if abs(t) < mpf(10) ** (-tol_digits) * max(1, abs(s)):
            small += 1
            if small >= 5:
                return s
        else:
            small = 0
    raise RuntimeError("no convergence")


# ---------------------------------------------------------------- q-main, LHS by summation

def ramanujan_a(q):
    return direct_sum(lambda k: q ** (k * k) * (1 - q ** (6 * k + 1)) / (1 - q)
                      * qpn(q, q**2, k) ** 2 * qpn(q**2, q**4, k) / qpn(q**4, q**4, k) ** 3)


def ramanujan_b(q):
    return direct_sum(lambda k: (-1) ** k * q ** (3 * k * k) * (1 - q ** (6 * k + 1)) / (1 - q)
                      * qpn(q, q**2, k) ** 3 / qpn(q**4, q**4, k) ** 3)


def sun(q):
    return direct_sum(lambda k: (-1) ** k * q ** (2 * k) * (1 + q ** (2 * k + 1)) / (1 - q ** (2 * k + 1)) ** 3)


def thm_b(q):
    return direct_sum(lambda k: (1 + q ** (4 * k + 2)) * q ** (2 * k)
                      / ((1 + q ** (2 * k + 1)) ** 2 * (1 - q ** (2 * k + 1)) ** 2))


def thm_c(q):
    return direct_sum(lambda k: qpn(q, q, k) / qpn(q, q**2, k + 1) * q ** (k * (k + 1) // 2))


def thm_d(q):
    return direct_sum(lambda k: qpn(q, q, k) ** 2 / qpn(q, q, 2 * k + 1) * q ** (k * (k + 1)))


def thm_e(q):
    return direct_sum(lambda k: (1 - q ** (3 * k + 2)) / (1 - q**2) * qpn(q**2, q**2, k) * qpn(q, q, k) ** 2
                      / qpn(q**3, q**2, k) ** 3 * q ** (k * (k + 1) // 2))


# ---------------------------------------------------------------- q -> 1 term limits

# Closed forms of lim (1-q)^a t_k(q), derived by hand from (q^c;q^s)_k ~ (1-q)^k s^k (c/s)_k.
TERM_LIMITS = {
    "sun": (3, sun, lambda k: (-1) ** k * mpf(2) / (2 * k + 1) ** 3, pi**3 / 16),
    "thm-b": (2, thm_b, lambda k: mpf(1) / 2 / (2 * k + 1) ** 2, pi**2 / 16),
    "thm-c": (1, thm_c, lambda k: factorial(k) / (2 ** (k + 1) * rf(mpf(1) / 2, k + 1)), pi / 2),
    "thm-d": (1, thm_d, lambda k: factorial(k) ** 2 / factorial(2 * k + 1), 2 * pi / (3 * sqrt(3))),
    "thm-e": (0, thm_e, lambda k: mpf(3 * k + 2) / 2 * factorial(k) ** 3 / (4**k * rf(mpf(3) / 2, k) ** 3), pi**2 / 8),
    "q-ramanujan-a": (0, ramanujan_a, lambda k: (6 * k + 1) * rf(mpf(1) / 2, k) ** 3 / (4**k * factorial(k) ** 3), 4 / pi),
    "q-ramanujan-b": (0, ramanujan_b,
                      lambda k: (-1) ** k * (6 * k + 1) * rf(mpf(1) / 2, k) ** 3 / (8**k * factorial(k) ** 3),
                      2 * sqrt(2) / pi),
}

# Single terms of each q-series, used to confirm the closed-form term limits.
TERMS = {
    "sun": lambda q, k: (-1) ** k * q ** (2 * k) * (1 + q ** (2 * k + 1)) / (1 - q ** (2 * k + 1)) ** 3,
    "thm-b": lambda q, k: (1 + q ** (4 * k + 2)) * q ** (2 * k) / ((1 + q ** (2 * k + 1)) ** 2 * (1 - q ** (2 * k + 1)) ** 2),
    "thm-c": lambda q, k: qpn(q, q, k) / qpn(q, q**2, k + 1) * q ** (k * (k + 1) // 2),
    "thm-d": lambda q, k: qpn(q, q, k) ** 2 / qpn(q, q, 2 * k + 1) * q ** (k * (k + 1)),
    "thm-e": lambda q, k: (1 - q ** (3 * k + 2)) / (1 - q**2) * qpn(q**2, q**2, k) * qpn(q, q, k) ** 2
    / qpn(q**3, q**2, k) ** 3 * q ** (k * (k + 1) // 2),
    "q-ramanujan-a": lambda q, k: q ** (k * k) * (1 - q ** (6 * k + 1)) / (1 - q) * qpn(q, q**2, k) ** 2
    * qpn(q**2, q**4, k) / qpn(q**4, q**4, k) ** 3,
    "q-ramanujan-b": lambda q, k: (-1) ** k * q ** (3 * k * k) * (1 - q ** (6 * k + 1)) / (1 - q)
    * qpn(q, q**2, k) ** 3 / qpn(q**4, q**4, k) ** 3,
}


def check_term_limits():
    h = mpf(10) ** -40
    q = 1 - h
    for name, (a, _, limit_term, target) in TERM_LIMITS.items():
        worst = max(abs(h**a * TERMS[name](q, k) - limit_term(k)) for k in range(6))
        total = nsum(limit_term, [0, inf])
        print(f"{name}: a={a} term-limit mismatch {mp.nstr(worst, 3)}  "
              f"sum of limits - target {mp.nstr(total - target, 3)}")


# ---------------------------------------------------------------- telescoping

def thm_aa_lhs(xs, ys, q):
    s = len(xs)

    def term(k):
        num = mpf(1)
        den = mpf(1)
        for x in xs:
            num *= qpn(x, q, k)
        for y in ys:
            den *= qpn(q * y, q, k)
        px = mpf(1)
        py = mpf(1)
        for x in xs:
            px *= 1 - q**k * x
        for y in ys:
            py *= 1 - q**k * y
        return num / den * (px - py)

    return direct_sum(term)


def corollary_a_product(xs, q):
    v = mpf(1)
    for x in xs:
        v *= qpinf(x, q) * qpinf(q / x, q) / (qpinf(q, q) * qpinf(q**2, q))
    return v


def corollary_b_product(xs, q):
    v = qpinf(q, q) ** (2 * len(xs))
    for x in xs:
        v /= qpinf(x, q) * qpinf(q / x, q)
    return v


def main():
    print("(1/2;1/2)_inf    ", mp.nstr(qpinf(mpf(1) / 2, mpf(1) / 2), 100))
    print("(1/4;1/2)_inf    ", mp.nstr(qpinf(mpf(1) / 4, mpf(1) / 2), 100))
    print("(-1/3;3/4)_inf   ", mp.nstr(qpinf(mpf(-1) / 3, mpf(3) / 4), 100))
    half = mpf(1) / 2
    for name, (_, lhs, _, _) in TERM_LIMITS.items():
        print(f"{name} LHS q=1/2  ", mp.nstr(lhs(half), 70))
    print("thm-aa LHS (1/2,1/3 | 1/5,1/7; 1/2)", mp.nstr(thm_aa_lhs([half, mpf(1) / 3], [mpf(1) / 5, mpf(1) / 7], half), 70))
    print("corollary A m=1 x=1/2 q=1/4", mp.nstr(corollary_a_product([half], mpf(1) / 4), 70))
    print("corollary B m=1 x=1/2 q=1/3", mp.nstr(corollary_b_product([half], mpf(1) / 3), 70))
    print("sin(pi/3)sin(pi/4)/pi^2", mp.nstr(sin(pi / 3) * sin(pi / 4) / pi**2, 70))
    check_term_limits()


if __name__ == "__main__":
    main()
