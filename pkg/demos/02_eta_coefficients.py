"""Fourier coefficients of three eta products vs their quadratic-form values.

The checker's right-hand sides come from three weight-3 eta products whose
q-expansions define integer sequences a(n), b(n), c(n).  At a prime p the
coefficient is either 0 (when the attached form x^2 + d*y^2 does not
represent p) or 4x^2 - 2p.  This script expands the products exactly,
prints the start of each table, and confirms the prime-index dichotomy.
"""

from binomsums import coefficient_closed_form, coefficient_table, primes_in_range, represent

FORMS = {"a": 1, "b": 3, "c": 2}  # series name -> d of the attached form
BOUND = 200


def main():
    tables = {name: coefficient_table(name, BOUND) for name in "abc"}
    print("n       ", " ".join(f"{n:>4}" for n in range(1, 16)))
    for name in "abc":
        print(f"{name}(n)    ", " ".join(f"{v:>4}" for v in tables[name][1:16]))

    print("\nname  d      p      x   y   coefficient   4x^2-2p")
    for name, d in FORMS.items():
        shown = 0
        for p in primes_in_range(5, BOUND):
            coeff = tables[name][p]
            assert coeff == coefficient_closed_form(name, p)
            rep = represent(p, d)
            if rep is None:
                assert coeff == 0
                continue
            assert coeff == 4 * rep.x**2 - 2 * p
            if shown < 5:
                print(f"{name:>4} {d:>2} {p:>6} {rep.x:>6} {rep.y:>3} "
                      f"{coeff:>13} {4 * rep.x**2 - 2 * p:>9}")
                shown += 1
        zeros = sum(
            1 for p in primes_in_range(5, BOUND)
            if tables[name][p] == 0
        )
        print(f"      ...and {name}(p) = 0 at the {zeros} primes the form misses\n")


if __name__ == "__main__":
    main()
