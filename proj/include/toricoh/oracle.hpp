#pragma once

#include "toricoh/fan.hpp"
#include "toricoh/resolve.hpp"

// Brute-force second opinions used by the test suite. Deliberately written
// as plain exhaustive loops that share no logic with the closed-form code
// they certify.
namespace toricoh::oracle {

struct SearchBudget {
  Coord max_entry = 32;    // matrix entries searched in [-max_entry, max_entry]
  Coord max_degree = 200;  // largest graded degree a caller intends to probe
};

// Counts lattice points (s,t) >= (0,0), not both zero, with s+t = d and
// p*t >= q*s, by direct enumeration of the slice.
Coord count_lattice_slice(Coord p, Coord q, Coord d);

// Finds a determinant -1 integer matrix with entries bounded by the budget
// sending v to (0,1) and w to (p,-q) with 0 <= q < p, by enumerating all
// candidate rows. A budget of twice the largest input coordinate always
// suffices; throws BudgetExhausted otherwise.
ConeType normal_form_search(LatticeVector v, LatticeVector w, const SearchBudget& budget);

// True iff walking the support arcs ccw, every arc's end ray is the next
// arc's start ray (the circle closes up).
bool check_complete_cover(const Fan& f);

}  // namespace toricoh::oracle
