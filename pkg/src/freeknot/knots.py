"""Named diagrams used in tests and documentation."""

#: Seven chords; smallest size at which I^(3) is nonzero.  Delta leaves three
#: classes after one round and two after three, and I^(3) = a4 while I^(1)
#: and I^(2) vanish.
WITNESS = "1 2 1 3 2 4 3 5 6 4 5 7 6 7"

#: Trefoil-like chord pattern; every chord is even and I^(1) vanishes.
TREFOIL = "1 2 3 1 2 3"

__all__ = ["WITNESS", "TREFOIL"]
