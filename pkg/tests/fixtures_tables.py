"""Expected result tables for the bundled run configurations.

Each entry: level, working prime, field degree, nebentype exponents over
the canonical basis, the fully-computed primes, the first-operator-only
primes, and rows (galois multiplicity, hecke multiplicity, sum string in
the report grammar).
"""

T = []


def t(N, p, r, eta, full, partial, rows):
    T.append(
        dict(N=N, p=p, r=r, eta=tuple(eta), full=tuple(full), partial=tuple(partial), rows=rows)
    )


t(9, 12379, 1, [0], [2, 5, 7], [], [
    (1, 1, "eps^0 + eps^1 + chi_9^3 eps^2 + chi_9^3 eps^3"),
    (1, 1, "chi_9^3 eps^0 + eps^1 + eps^2 + chi_9^3 eps^3"),
    (1, 1, "chi_9^3 eps^0 + chi_9^3 eps^1 + eps^2 + eps^3"),
])

t(11, 4001, 2, [0], [2, 3, 5, 7], [], [
    (1, 1, "eps^0 + eps^1 + eps^2 sigma_{11,2}"),
    (1, 1, "eps^2 + eps^3 + eps^0 sigma_{11,2}"),
])

t(12, 5413, 2, [1, 1], [5, 7], [], [
    (1, 1, "eps^0 + eps^1 + chi_{12,0} eps^2 + chi_{12,1} eps^3"),
    (1, 1, "eps^0 + eps^1 + chi_{12,1} eps^2 + chi_{12,0} eps^3"),
    (1, 1, "chi_{12,0} eps^0 + eps^1 + eps^2 + chi_{12,1} eps^3"),
    (1, 1, "chi_{12,1} eps^0 + eps^1 + eps^2 + chi_{12,0} eps^3"),
    (1, 1, "chi_{12,0} eps^0 + chi_{12,1} eps^1 + eps^2 + eps^3"),
    (1, 1, "chi_{12,1} eps^0 + chi_{12,0} eps^1 + eps^2 + eps^3"),
])

t(13, 12037, 1, [0], [2, 3, 5, 7], [], [
    (1, 1, "eps^1 + eps^2 + eps^0 sigma_{13,4}"),
])

t(13, 12037, 1, [2], [2, 3, 5, 7], [], [
    (1, 1, "eps^0 + eps^1 + eps^2 sigma_{13,2}"),
    (1, 1, "eps^2 + eps^3 + eps^0 sigma_{13,2}"),
])

t(14, 12379, 2, [0], [3, 5], [], [
    (1, 1, "eps^0 + eps^1 + eps^2 sigma_{14,2}"),
    (1, 1, "eps^2 + eps^3 + eps^0 sigma_{14,2}"),
])

t(15, 12037, 2, [0], [2, 7], [11], [
    (1, 1, "eps^0 + eps^1 + eps^2 sigma_{15,2}"),
    (1, 1, "eps^2 + eps^3 + eps^0 sigma_{15,2}"),
])

t(15, 12037, 2, [1, 1], [2, 7], [], [
    (1, 1, "eps^0 + eps^1 + chi_{15,0} eps^2 + chi_{15,1} eps^3"),
    (1, 1, "eps^0 + eps^1 + chi_{15,1} eps^2 + chi_{15,0} eps^3"),
    (1, 1, "chi_{15,0} eps^0 + eps^1 + eps^2 + chi_{15,1} eps^3"),
    (1, 1, "chi_{15,1} eps^0 + eps^1 + eps^2 + chi_{15,0} eps^3"),
    (1, 1, "chi_{15,0} eps^0 + chi_{15,1} eps^1 + eps^2 + eps^3"),
    (1, 1, "chi_{15,1} eps^0 + chi_{15,0} eps^1 + eps^2 + eps^3"),
])

t(16, 4001, 6, [0, 0], [3, 5, 7], [], [
    (1, 1, "eps^0 + eps^1 + chi_{16,0} eps^2 + chi_{16,0} eps^3"),
    (1, 1, "chi_{16,0} eps^0 + eps^1 + eps^2 + chi_{16,0} eps^3"),
    (1, 1, "chi_{16,0} eps^0 + chi_{16,0} eps^1 + eps^2 + eps^3"),
])

t(16, 4001, 6, [0, 1], [3, 5, 7], [], [
    (1, 1, "eps^0 + eps^1 + eps^2 sigma_{16,2}"),
    (1, 1, "eps^2 + eps^3 + eps^0 sigma_{16,2}"),
])

t(17, 16001, 2, [0], [2, 3, 5, 7], [], [
    (1, 1, "eps^0 + eps^1 + eps^2 sigma_{17,2a}"),
    (1, 1, "eps^2 + eps^3 + eps^0 sigma_{17,2a}"),
    (1, 1, "eps^1 + eps^2 + eps^0 sigma_{17,4}"),
])

t(17, 16001, 2, [2], [2, 3, 5, 7], [], [
    (1, 1, "eps^0 + eps^1 + eps^2 sigma_{17,2b}"),
    (1, 1, "eps^2 + eps^3 + eps^0 sigma_{17,2b}"),
])

t(18, 3637, 2, [0], [5, 7], [], [
    (1, 3, "eps^0 + eps^1 + chi_18^3 eps^2 + chi_18^3 eps^3"),
    (1, 3, "chi_18^3 eps^0 + eps^1 + eps^2 + chi_18^3 eps^3"),
    (1, 3, "chi_18^3 eps^0 + chi_18^3 eps^1 + eps^2 + eps^3"),
])

t(18, 3637, 2, [2], [5, 7], [11], [
    (1, 1, "eps^0 + eps^1 + eps^2 sigma_{18,2}"),
    (1, 1, "eps^2 + eps^3 + eps^0 sigma_{18,2}"),
])

t(19, 3637, 6, [0], [2, 3, 5, 7], [], [
    (1, 1, "eps^0 + eps^1 + eps^2 sigma_{19,2a}"),
    (1, 1, "eps^2 + eps^3 + eps^0 sigma_{19,2a}"),
    (1, 1, "eps^1 + eps^2 + eps^0 sigma_{19,4}"),
])

t(19, 3637, 6, [2], [2, 3, 5, 7], [], [
    (1, 1, "eps^0 + eps^1 + eps^2 sigma_{19,2b}"),
    (1, 1, "eps^2 + eps^3 + eps^0 sigma_{19,2b}"),
])

t(20, 12037, 12, [0, 0], [3, 7], [11, 13], [
    (1, 1, "eps^0 + eps^1 + eps^2 sigma_{20,2a}"),
    (1, 1, "eps^2 + eps^3 + eps^0 sigma_{20,2a}"),
])

t(20, 12037, 12, [1, 1], [3, 7], [11, 13], [
    (1, 1, "eps^0 + eps^1 + chi_{20,0} eps^2 + chi_{20,1} eps^3"),
    (1, 1, "eps^0 + eps^1 + chi_{20,1} eps^2 + chi_{20,0} eps^3"),
    (1, 1, "chi_{20,0} eps^0 + eps^1 + eps^2 + chi_{20,1} eps^3"),
    (1, 1, "chi_{20,1} eps^0 + eps^1 + eps^2 + chi_{20,0} eps^3"),
    (1, 1, "chi_{20,0} eps^0 + chi_{20,1} eps^1 + eps^2 + eps^3"),
    (1, 1, "chi_{20,1} eps^0 + chi_{20,0} eps^1 + eps^2 + eps^3"),
    (1, 1, "eps^0 + eps^1 + eps^2 sigma_{20,2b}"),
    (1, 1, "eps^2 + eps^3 + eps^0 sigma_{20,2b}"),
])

t(21, 12037, 6, [0, 0], [2, 5], [], [
    (1, 1, "eps^0 + eps^1 + eps^2 sigma_{21,2a}"),
    (1, 1, "eps^2 + eps^3 + eps^0 sigma_{21,2a}"),
    (1, 1, "eps^1 + eps^2 + eps^0 sigma_{21,4}"),
])

t(21, 12037, 6, [0, 2], [2, 5], [], [
    (1, 1, "eps^0 + eps^1 + eps^2 sigma_{21,2b}"),
    (1, 1, "eps^2 + eps^3 + eps^0 sigma_{21,2b}"),
])

t(21, 12037, 6, [1, 1], [2, 5], [11, 13], [
    (1, 1, "eps^0 + eps^1 + chi_{21,0} eps^2 + chi_{21,1} eps^3"),
    (1, 1, "eps^0 + eps^1 + chi_{21,1} eps^2 + chi_{21,0} eps^3"),
    (1, 1, "chi_{21,0} eps^0 + eps^1 + eps^2 + chi_{21,1} eps^3"),
    (1, 1, "chi_{21,1} eps^0 + eps^1 + eps^2 + chi_{21,0} eps^3"),
    (1, 1, "chi_{21,0} eps^0 + chi_{21,1} eps^1 + eps^2 + eps^3"),
    (1, 1, "chi_{21,1} eps^0 + chi_{21,0} eps^1 + eps^2 + eps^3"),
    (1, 1, "eps^0 + eps^1 + eps^2 sigma_{21,2c}"),
    (1, 1, "eps^2 + eps^3 + eps^0 sigma_{21,2c}"),
])

t(21, 12037, 6, [1, 3], [2, 5], [], [
    (1, 1, "eps^0 + eps^1 + chi_{21,0} eps^2 + chi_{21,1}^3 eps^3"),
    (1, 1, "eps^0 + eps^1 + chi_{21,1}^3 eps^2 + chi_{21,0} eps^3"),
    (1, 1, "chi_{21,0} eps^0 + eps^1 + eps^2 + chi_{21,1}^3 eps^3"),
    (1, 1, "chi_{21,1}^3 eps^0 + eps^1 + eps^2 + chi_{21,0} eps^3"),
    (1, 1, "chi_{21,0} eps^0 + chi_{21,1}^3 eps^1 + eps^2 + eps^3"),
    (1, 1, "chi_{21,1}^3 eps^0 + chi_{21,0} eps^1 + eps^2 + eps^3"),
    (1, 1, "eps^0 + chi_{21,0} eps^2 + eps^1 sigma_{7,3}"),
    (1, 1, "eps^1 + chi_{21,0} eps^3 + eps^0 sigma_{7,3}"),
    (1, 1, "chi_{21,0} eps^0 + eps^2 + eps^1 sigma_{7,3}"),
    (1, 1, "chi_{21,0} eps^1 + eps^3 + eps^0 sigma_{7,3}"),
])

t(22, 16001, 2, [0], [3, 5, 7], [], [
    (1, 3, "eps^0 + eps^1 + eps^2 sigma_{11,2}"),
    (1, 3, "eps^2 + eps^3 + eps^0 sigma_{11,2}"),
    (1, 1, "eps^1 + eps^2 + eps^0 sigma_{22,4}"),
])

t(22, 16001, 2, [2], [3, 5, 7], [], [
    (1, 1, "eps^0 + eps^1 + eps^2 sigma_{22,2}"),
    (1, 1, "eps^2 + eps^3 + eps^0 sigma_{22,2}"),
])

t(23, 22067, 60, [0], [2, 3, 5, 7], [], [
    (2, 1, "eps^0 + eps^1 + eps^2 sigma_{23,2a}"),
    (2, 1, "eps^2 + eps^3 + eps^0 sigma_{23,2a}"),
    (1, 1, "eps^1 + eps^2 + eps^0 sigma_{23,4}"),
])

t(23, 22067, 60, [2], [2, 3, 5, 7], [], [
    (1, 1, "eps^0 + eps^1 + eps^2 sigma_{23,2b}"),
    (1, 1, "eps^2 + eps^3 + eps^0 sigma_{23,2b}"),
])

t(24, 12379, 2, [0, 0, 0], [5], [7, 11, 13], [
    (1, 1, "eps^0 + eps^1 + eps^2 sigma_{24,2a}"),
    (1, 1, "eps^2 + eps^3 + eps^0 sigma_{24,2a}"),
])

t(24, 12379, 2, [0, 1, 0], [5], [7, 11, 13], [
    (2, 1, "eps^0 + eps^1 + eps^2 sigma_{24,2b}"),
    (2, 1, "eps^2 + eps^3 + eps^0 sigma_{24,2b}"),
])

t(24, 12379, 2, [1, 0, 1], [5], [7, 11, 13], [
    (1, 3, "eps^0 + eps^1 + chi_{24,0} eps^2 + chi_{24,2} eps^3"),
    (1, 3, "eps^0 + eps^1 + chi_{24,2} eps^2 + chi_{24,0} eps^3"),
    (1, 3, "chi_{24,0} eps^0 + eps^1 + eps^2 + chi_{24,2} eps^3"),
    (1, 3, "chi_{24,2} eps^0 + eps^1 + eps^2 + chi_{24,0} eps^3"),
    (1, 3, "chi_{24,0} eps^0 + chi_{24,2} eps^1 + eps^2 + eps^3"),
    (1, 3, "chi_{24,2} eps^0 + chi_{24,0} eps^1 + eps^2 + eps^3"),
])

t(24, 12379, 2, [1, 1, 1], [5], [7, 11, 13, 17], [
    (1, 1, "eps^0 + eps^1 + chi_{24,0}*chi_{24,1} eps^2 + chi_{24,2} eps^3"),
    (1, 1, "eps^0 + eps^1 + chi_{24,2} eps^2 + chi_{24,0}*chi_{24,1} eps^3"),
    (1, 1, "chi_{24,0}*chi_{24,1} eps^0 + eps^1 + eps^2 + chi_{24,2} eps^3"),
    (1, 1, "chi_{24,2} eps^0 + eps^1 + eps^2 + chi_{24,0}*chi_{24,1} eps^3"),
    (1, 1, "chi_{24,0}*chi_{24,1} eps^0 + chi_{24,2} eps^1 + eps^2 + eps^3"),
    (1, 1, "chi_{24,2} eps^0 + chi_{24,0}*chi_{24,1} eps^1 + eps^2 + eps^3"),
    (2, 1, "eps^0 + eps^1 + eps^2 sigma_{24,2c}"),
    (2, 1, "eps^2 + eps^3 + eps^0 sigma_{24,2c}"),
    (1, 1, "eps^0 + chi_{24,2} eps^2 + eps^1 sigma_{8,3}"),
    (1, 1, "eps^1 + chi_{24,2} eps^3 + eps^0 sigma_{8,3}"),
    (1, 1, "chi_{24,2} eps^0 + eps^2 + eps^1 sigma_{8,3}"),
    (1, 1, "chi_{24,2} eps^1 + eps^3 + eps^0 sigma_{8,3}"),
])

t(25, 16001, 60, [0], [2, 3], [], [
    (1, 1, "eps^0 + eps^1 + chi_25^15 eps^2 + chi_25^5 eps^3"),
    (1, 1, "eps^0 + eps^1 + chi_25^5 eps^2 + chi_25^15 eps^3"),
    (1, 1, "chi_25^15 eps^0 + eps^1 + eps^2 + chi_25^5 eps^3"),
    (1, 1, "chi_25^5 eps^0 + eps^1 + eps^2 + chi_25^15 eps^3"),
    (1, 1, "chi_25^15 eps^0 + chi_25^5 eps^1 + eps^2 + eps^3"),
    (1, 1, "chi_25^5 eps^0 + chi_25^15 eps^1 + eps^2 + eps^3"),
    (1, 1, "eps^1 + eps^2 + eps^0 sigma_{25,4}"),
])

t(25, 16001, 60, [2], [2, 3], [], [
    (2, 1, "eps^0 + eps^1 + eps^2 sigma_{25,2a}"),
    (2, 1, "eps^2 + eps^3 + eps^0 sigma_{25,2a}"),
])

t(25, 16001, 60, [4], [2, 3], [], [
    (1, 1, "eps^0 + eps^1 + eps^2 sigma_{25,2b}"),
    (1, 1, "eps^2 + eps^3 + eps^0 sigma_{25,2b}"),
])

t(25, 16001, 60, [10], [2, 3], [], [
    (1, 1, "eps^0 + eps^1 + chi_25^15 eps^2 + chi_25^15 eps^3"),
    (1, 1, "eps^0 + eps^1 + chi_25^5 eps^2 + chi_25^5 eps^3"),
    (1, 1, "chi_25^15 eps^0 + eps^1 + eps^2 + chi_25^15 eps^3"),
    (1, 1, "chi_25^5 eps^0 + eps^1 + eps^2 + chi_25^5 eps^3"),
    (1, 1, "chi_25^15 eps^0 + chi_25^15 eps^1 + eps^2 + eps^3"),
    (1, 1, "chi_25^5 eps^0 + chi_25^5 eps^1 + eps^2 + eps^3"),
])

t(26, 12037, 2, [0], [3, 5], [], [
    (1, 1, "eps^0 + eps^1 + eps^2 sigma_{26,2a}"),
    (1, 1, "eps^2 + eps^3 + eps^0 sigma_{26,2a}"),
    (1, 1, "eps^0 + eps^1 + eps^2 sigma_{26,2b}"),
    (1, 1, "eps^2 + eps^3 + eps^0 sigma_{26,2b}"),
    (1, 3, "eps^1 + eps^2 + eps^0 sigma_{13,4}"),
])

t(26, 12037, 2, [2], [3, 5], [], [
    (1, 3, "eps^0 + eps^1 + eps^2 sigma_{13,2}"),
    (1, 3, "eps^2 + eps^3 + eps^0 sigma_{13,2}"),
])

t(26, 12037, 2, [4], [3, 5], [], [
    (1, 1, "eps^0 + eps^1 + eps^2 sigma_{26,2c}"),
    (1, 1, "eps^2 + eps^3 + eps^0 sigma_{26,2c}"),
])

t(26, 12037, 2, [6], [3, 5], [], [
    (2, 1, "eps^0 + eps^1 + eps^2 sigma_{26,2d}"),
    (2, 1, "eps^2 + eps^3 + eps^0 sigma_{26,2d}"),
])

t(27, 11863, 6, [0], [2, 5], [7], [
    (1, 3, "eps^0 + eps^1 + chi_27^9 eps^2 + chi_27^9 eps^3"),
    (1, 3, "chi_27^9 eps^0 + eps^1 + eps^2 + chi_27^9 eps^3"),
    (1, 3, "chi_27^9 eps^0 + chi_27^9 eps^1 + eps^2 + eps^3"),
    (1, 1, "eps^0 + eps^1 + eps^2 sigma_{27,2a}"),
    (1, 1, "eps^2 + eps^3 + eps^0 sigma_{27,2a}"),
    (1, 1, "eps^1 + eps^2 + eps^0 sigma_{27,4}"),
])

t(27, 11863, 6, [2], [2, 5], [], [
    (2, 1, "eps^0 + eps^1 + eps^2 sigma_{27,2b}"),
    (2, 1, "eps^2 + eps^3 + eps^0 sigma_{27,2b}"),
])

t(27, 11863, 6, [6], [2, 5], [7], [
    (1, 1, "eps^0 + eps^1 + chi_27^15 eps^2 + chi_27^9 eps^3"),
    (1, 1, "eps^0 + eps^1 + chi_27^9 eps^2 + chi_27^15 eps^3"),
    (1, 1, "chi_27^15 eps^0 + eps^1 + eps^2 + chi_27^9 eps^3"),
    (1, 1, "chi_27^9 eps^0 + eps^1 + eps^2 + chi_27^15 eps^3"),
    (1, 1, "chi_27^15 eps^0 + chi_27^9 eps^1 + eps^2 + eps^3"),
    (1, 1, "chi_27^9 eps^0 + chi_27^15 eps^1 + eps^2 + eps^3"),
    (1, 1, "eps^0 + chi_27^9 eps^2 + eps^1 sigma_{9,3}"),
    (1, 1, "eps^1 + chi_27^9 eps^3 + eps^0 sigma_{9,3}"),
    (1, 1, "chi_27^9 eps^0 + eps^2 + eps^1 sigma_{9,3}"),
    (1, 1, "chi_27^9 eps^1 + eps^3 + eps^0 sigma_{9,3}"),
])

t(28, 12379, 12, [0, 0], [3, 5], [11, 13], [
    (1, 3, "eps^0 + eps^1 + eps^2 sigma_{14,2}"),
    (1, 3, "eps^2 + eps^3 + eps^0 sigma_{14,2}"),
    (1, 1, "eps^1 + eps^2 + eps^0 sigma_{28,4}"),
])

t(28, 12379, 12, [0, 2], [3, 5], [], [
    (1, 1, "eps^0 + eps^1 + eps^2 sigma_{28,2a}"),
    (1, 1, "eps^2 + eps^3 + eps^0 sigma_{28,2a}"),
])

t(28, 12379, 12, [1, 1], [3, 5], [], [
    (1, 1, "eps^0 + eps^1 + chi_{28,0} eps^2 + chi_{28,1} eps^3"),
    (1, 1, "eps^0 + eps^1 + chi_{28,1} eps^2 + chi_{28,0} eps^3"),
    (1, 1, "chi_{28,0} eps^0 + eps^1 + eps^2 + chi_{28,1} eps^3"),
    (1, 1, "chi_{28,1} eps^0 + eps^1 + eps^2 + chi_{28,0} eps^3"),
    (1, 1, "chi_{28,0} eps^0 + chi_{28,1} eps^1 + eps^2 + eps^3"),
    (1, 1, "chi_{28,1} eps^0 + chi_{28,0} eps^1 + eps^2 + eps^3"),
    (2, 1, "eps^0 + eps^1 + eps^2 sigma_{28,2b}"),
    (2, 1, "eps^2 + eps^3 + eps^0 sigma_{28,2b}"),
])

t(28, 12379, 12, [1, 3], [3, 5], [11, 13], [
    (1, 1, "eps^0 + eps^1 + chi_{28,0} eps^2 + chi_{28,1}^3 eps^3"),
    (1, 1, "eps^0 + eps^1 + chi_{28,1}^3 eps^2 + chi_{28,0} eps^3"),
    (1, 1, "chi_{28,0} eps^0 + eps^1 + eps^2 + chi_{28,1}^3 eps^3"),
    (1, 1, "chi_{28,1}^3 eps^0 + eps^1 + eps^2 + chi_{28,0} eps^3"),
    (1, 1, "chi_{28,0} eps^0 + chi_{28,1}^3 eps^1 + eps^2 + eps^3"),
    (1, 1, "chi_{28,1}^3 eps^0 + chi_{28,0} eps^1 + eps^2 + eps^3"),
    (2, 1, "eps^0 + eps^1 + eps^2 sigma_{28,2c}"),
    (2, 1, "eps^2 + eps^3 + eps^0 sigma_{28,2c}"),
    (1, 1, "eps^0 + chi_{28,0} eps^2 + eps^1 sigma_{7,3}"),
    (1, 1, "eps^1 + chi_{28,0} eps^3 + eps^0 sigma_{7,3}"),
    (1, 1, "chi_{28,0} eps^0 + eps^2 + eps^1 sigma_{7,3}"),
    (1, 1, "chi_{28,0} eps^1 + eps^3 + eps^0 sigma_{7,3}"),
])

t(29, 2297, 6, [0], [2, 3, 5], [], [
    (2, 1, "eps^0 + eps^1 + eps^2 sigma_{29,2a}"),
    (2, 1, "eps^2 + eps^3 + eps^0 sigma_{29,2a}"),
    (2, 1, "eps^1 + eps^2 + eps^0 sigma_{29,4}"),
])

t(29, 2297, 6, [2], [2, 3, 5], [], [
    (2, 1, "eps^0 + eps^1 + eps^2 sigma_{29,2b}"),
    (2, 1, "eps^2 + eps^3 + eps^0 sigma_{29,2b}"),
])

t(29, 2297, 6, [4], [2, 3, 5], [], [
    (1, 1, "eps^0 + eps^1 + eps^2 sigma_{29,2c}"),
    (1, 1, "eps^2 + eps^3 + eps^0 sigma_{29,2c}"),
])

t(29, 2297, 6, [14], [2, 3, 5], [], [
    (2, 1, "eps^0 + eps^1 + eps^2 sigma_{29,2d}"),
    (2, 1, "eps^2 + eps^3 + eps^0 sigma_{29,2d}"),
    (2, 1, "eps^0 + eps^1 Sym^2(sigma_{29,2d})"),
])

t(31, 4201, 60, [0], [2, 3, 5], [], [
    (2, 1, "eps^0 + eps^1 + eps^2 sigma_{31,2a}"),
    (2, 1, "eps^2 + eps^3 + eps^0 sigma_{31,2a}"),
    (2, 1, "eps^1 + eps^2 + eps^0 sigma_{31,4}"),
])

t(31, 4201, 60, [2], [2, 3, 5], [], [
    (2, 1, "eps^0 + eps^1 + eps^2 sigma_{31,2b}"),
    (2, 1, "eps^2 + eps^3 + eps^0 sigma_{31,2b}"),
])

t(31, 4201, 60, [6], [2, 3, 5], [], [
    (1, 1, "eps^0 + eps^1 + eps^2 sigma_{31,2c}"),
    (1, 1, "eps^2 + eps^3 + eps^0 sigma_{31,2c}"),
])

t(31, 4201, 60, [10], [2, 3, 5], [], [
    (2, 1, "eps^0 + eps^1 + eps^2 sigma_{31,2d}"),
    (2, 1, "eps^2 + eps^3 + eps^0 sigma_{31,2d}"),
])

t(37, 3889, 24, [0], [2, 3, 5], [7, 13], [
    (1, 1, "eps^0 + eps^1 + eps^2 sigma_{37,2a}"),
    (1, 1, "eps^2 + eps^3 + eps^0 sigma_{37,2a}"),
    (1, 1, "eps^0 + eps^1 + eps^2 sigma_{37,2b}"),
    (1, 1, "eps^2 + eps^3 + eps^0 sigma_{37,2b}"),
    (4, 1, "eps^1 + eps^2 + eps^0 sigma_{37,4}"),
])

t(37, 3889, 24, [2], [2, 3, 5], [], [
    (3, 1, "eps^0 + eps^1 + eps^2 sigma_{37,2c}"),
    (3, 1, "eps^2 + eps^3 + eps^0 sigma_{37,2c}"),
])

t(37, 3889, 24, [4], [2, 3, 5], [], [
    (1, 1, "eps^0 + eps^1 + eps^2 sigma_{37,2d}"),
    (1, 1, "eps^2 + eps^3 + eps^0 sigma_{37,2d}"),
    (1, 1, "eps^0 + eps^1 + eps^2 sigma_{37,2e}"),
    (1, 1, "eps^2 + eps^3 + eps^0 sigma_{37,2e}"),
])

t(37, 3889, 24, [6], [2, 3, 5], [], [
    (2, 1, "eps^0 + eps^1 + eps^2 sigma_{37,2f}"),
    (2, 1, "eps^2 + eps^3 + eps^0 sigma_{37,2f}"),
])

t(37, 3889, 24, [12], [2, 3, 5], [], [
    (1, 1, "eps^0 + eps^1 + eps^2 sigma_{37,2g}"),
    (1, 1, "eps^2 + eps^3 + eps^0 sigma_{37,2g}"),
])

t(37, 3889, 24, [18], [2, 3, 5], [], [
    (2, 1, "eps^0 + eps^1 + eps^2 sigma_{37,2h}"),
    (2, 1, "eps^2 + eps^3 + eps^0 sigma_{37,2h}"),
    (2, 1, "eps^0 + eps^1 Sym^2(sigma_{37,2h})"),
])

t(41, 21881, 60, [0], [2, 3, 5], [], [
    (3, 1, "eps^0 + eps^1 + eps^2 sigma_{41,2a}"),
    (3, 1, "eps^2 + eps^3 + eps^0 sigma_{41,2a}"),
    (3, 1, "eps^1 + eps^2 + eps^0 sigma_{41,4}"),
])

t(41, 21881, 60, [2], [2, 3, 5], [], [
    (3, 1, "eps^0 + eps^1 + eps^2 sigma_{41,2b}"),
    (3, 1, "eps^2 + eps^3 + eps^0 sigma_{41,2b}"),
])

t(41, 21881, 60, [4], [2, 3, 5], [], [
    (2, 1, "eps^0 + eps^1 + eps^2 sigma_{41,2c}"),
    (2, 1, "eps^2 + eps^3 + eps^0 sigma_{41,2c}"),
])

t(41, 21881, 60, [8], [2, 3, 5], [], [
    (2, 1, "eps^0 + eps^1 + eps^2 sigma_{41,2d}"),
    (2, 1, "eps^2 + eps^3 + eps^0 sigma_{41,2d}"),
])

t(41, 21881, 60, [10], [2, 3, 5], [], [
    (3, 1, "eps^0 + eps^1 + eps^2 sigma_{41,2e}"),
    (3, 1, "eps^2 + eps^3 + eps^0 sigma_{41,2e}"),
    (1, 1, "eps^0 + eps^1 delta_41"),
    (1, 1, "eps^3 + eps^0 delta_41"),
])

t(41, 21881, 60, [20], [2, 3, 5], [], [
    (2, 1, "eps^0 + eps^1 + eps^2 sigma_{41,2f}"),
    (2, 1, "eps^2 + eps^3 + eps^0 sigma_{41,2f}"),
    (2, 1, "eps^0 + eps^1 Sym^2(sigma_{41,2f})"),
])


HOMOLOGY_DIMS = {
    # (N, eta exponents) -> middle homology dimension, the per-table sum of
    # galois multiplicity times hecke multiplicity
    (11, (0,)): 2,
    (13, (0,)): 1,
    (13, (2,)): 2,
    (17, (0,)): 3,
    (41, (0,)): 9,
}
