# Reference zero locations for test_zeros.cpp (mpmath, 30 digits).
from mpmath import mp, mpf, zeta, findroot

mp.dps = 30

guesses = {"0.01": 0.99, "0.05": 0.94, "0.1": 0.87, "0.25": 0.61, "0.45": 0.14, "0.4999": 0.0003}
for a, g in guesses.items():
    root = findroot(lambda s: zeta(s, mpf(a)), mpf(g))
    print(f"hurwitz a={a:7s} {mp.nstr(root, 20)}")

for a, g in (("0.3", 0.83), ("0.7", 0.68), ("1", 0.63)):
    aa = mpf(a)
    root = findroot(lambda s: (zeta(s, aa) ** 2 - zeta(2 * s, aa)) / 2, mpf(g))
    print(f"diagonal a={a:4s} {mp.nstr(root, 20)}")
