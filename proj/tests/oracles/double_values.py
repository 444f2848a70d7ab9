# Reference values for test_double_zeta.cpp (mpmath, 40 digits).
# zeta2 off the absolutely convergent region: continuation with l = 1 where
# the remainder Phi_1(s2|n,a) comes from mpmath's Hurwitz zeta rather than a
# quadrature, and the n-sum (terms ~ n^-(s1+s2+3)) is accelerated by nsum.
from mpmath import mp, mpf, mpc, zeta, nsum, inf, quad, floor, bernpoly, polylog

mp.dps = 40


def phi1(s, n, a):
    # (s(s+1)/2) int_n^inf B2(x - [x]) (x+a)^(-s-2) dx, from the Euler-Maclaurin identity
    b = n + a
    return b ** (1 - s) / (s - 1) - b ** (-s) / 2 + s / 12 * b ** (-s - 1) - zeta(s, b + 1)


def zeta2(s1, s2, a):
    S = s1 + s2
    t1 = a ** (-s1) * zeta(s2, a + 1)
    t2 = zeta(S - 1, a + 1) / (s2 - 1)
    t3 = -mpf(1) / 2 * zeta(S, a + 1) + s2 / 12 * zeta(S + 1, a + 1)
    t4 = nsum(lambda n: phi1(s2, n, a) * (n + a) ** (-s1), [1, inf])
    return t1 + t2 + t3 - t4


def phi_l(s, lam, a, l):
    # partial period by quadrature, then the Euler-Maclaurin closed form
    # (n+a)^(1-s)/(s-1) + sum_r B_{r+1}/(r+1)! (s)_r (n+a)^(-s-r) - zeta(s, n+a+1)
    p = l + 1
    n = mp.ceil(lam)
    head = 0
    if n > lam:
        f = lambda x: bernpoly(p, x - floor(x)) * (x + a) ** (-s - p)
        head = mp.rf(s, p) / mp.factorial(p) * quad(f, [lam, n])
    b = n + a
    closed = b ** (1 - s) / (s - 1) - zeta(s, b + 1)
    for r in range(l + 1):
        closed += mp.bernoulli(r + 1) / mp.factorial(r + 1) * mp.rf(s, r) * b ** (-s - r)
    return head + closed


def phi2_z1_one(s1, s2, a, z, M=200, K=30):
    # sum_m (m+a)^(-s1) Phi(s2, m+a+1, z): backward Lerch recurrence from the
    # large-b expansion Phi(s,b,z) ~ sum_k c_k (s)_k b^(-s-k), and the m >= M tail
    # summed exactly through Hurwitz zeta values
    c = [(-1) ** k * polylog(-k, z) / mp.factorial(k) for k in range(K)]
    c[0] += 1
    b = a + M + 1
    inner = sum(c[k] * mp.rf(s2, k) * b ** (-s2 - k) for k in range(K))
    acc = 0
    for m in range(M - 1, -1, -1):
        inner = (m + a + 1) ** (-s2) + z * inner
        acc += (m + a) ** (-s1) * inner
    for k in range(K):
        for j in range(K):
            acc += c[k] * mp.rf(s2, k) * mp.binomial(-s2 - k, j) * zeta(s1 + s2 + k + j, a + M)
    return acc


rows = [
    ("zeta2(2,2;1)", zeta2(mpf(2), mpf(2), mpf(1))),
    ("zeta2(1.5,2;0.5)", zeta2(mpf("1.5"), mpf(2), mpf("0.5"))),
    ("zeta2(0.5,1.2;0.7)", zeta2(mpf("0.5"), mpf("1.2"), mpf("0.7"))),
    ("zeta2(0.3,1.4;0.3)", zeta2(mpf("0.3"), mpf("1.4"), mpf("0.3"))),
    ("zeta2(0.7,1.2;1)", zeta2(mpf("0.7"), mpf("1.2"), mpf(1))),
    ("zeta2(0.5+2i,1.3-1i;0.6)", zeta2(mpc("0.5", 2), mpc("1.3", -1), mpf("0.6"))),
    ("zeta2(0.9,0.9;1)", zeta2(mpf("0.9"), mpf("0.9"), mpf(1))),
    ("zeta2(0.2,0.5;0.4)", zeta2(mpf("0.2"), mpf("0.5"), mpf("0.4"))),
    ("zeta2(0.4,1.64;1)", zeta2(mpf("0.4"), mpf("1.64"), mpf(1))),
    ("zeta2(0.3+1i,1.75-2i;0.4)", zeta2(mpc("0.3", 1), mpc("1.75", -2), mpf("0.4"))),
    ("phi0(2|1,1)", phi_l(mpf(2), mpf(1), mpf(1), 0)),
    ("phi1(1.5|2.5,0.3)", phi_l(mpf("1.5"), mpf("2.5"), mpf("0.3"), 1)),
    ("Phi2(1.2,0.3;0.3;1,-1)", phi2_z1_one(mpf("1.2"), mpf("0.3"), mpf("0.3"), mpf(-1))),
    ("Phi2(1.1,0.9;0.3;1,-1)", phi2_z1_one(mpf("1.1"), mpf("0.9"), mpf("0.3"), mpf(-1))),
    ("Phi2(1.5+.5i,.5-.3i;0.7;1,i)", phi2_z1_one(mpc("1.5", "0.5"), mpc("0.5", "-0.3"), mpf("0.7"), mpc(0, 1))),
    ("Phi2(2,0.8;1;1,e^(i pi/3))", phi2_z1_one(mpf(2), mpf("0.8"), mpf(1), mp.exp(1j * mp.pi / 3))),
]
for name, v in rows:
    v = mpc(v)
    print(f"{name:28s} {mp.nstr(v.real, 20)} {mp.nstr(v.imag, 20)}")
