# Reference values for test_dirichlet.cpp (mpmath, 30 digits).
from mpmath import mp, dirichlet, zeta, polylog, catalan, mpf, mpc

mp.dps = 30

chi3 = [0, 1, -1]
chi4 = [0, 1, 0, -1]
chi5_real = [0, 1, -1, -1, 1]
chi5_c = [0, 1, 1j, -1j, -1]  # 2 -> i

rows = [
    ("L chi3 s=2", dirichlet(2, chi3)),
    ("L chi3 s=0.5", dirichlet(mpf("0.5"), chi3)),
    ("L chi4 s=0.5", dirichlet(mpf("0.5"), chi4)),
    ("L chi4 s=0.5+3i", dirichlet(mpc("0.5", 3), chi4)),
    ("L chi5 real s=2", dirichlet(2, chi5_real)),
    ("L chi5 complex s=1.5+2i", dirichlet(mpc("1.5", 2), chi5_c)),
    ("L chi4 s=1", dirichlet(1, chi4)),
    ("catalan", catalan),
    ("zeta(2,1/4)", zeta(2, mpf(1) / 4)),
    ("zeta(2.5,2/3)", zeta(mpf("2.5"), mpf(2) / 3)),
    ("Li_2(-1)", polylog(2, -1)),
]
for name, v in rows:
    v = mpc(v)
    print(f"{name:28s} {mp.nstr(v.real, 20)} {mp.nstr(v.imag, 20)}")
