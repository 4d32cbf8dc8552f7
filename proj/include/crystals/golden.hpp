#pragma once

#include <vector>

#include "crystals/tableau.hpp"

namespace crystals::golden {

using TableauList = std::vector<Tableau>;

// Demazure crystal of the word (2,1) on shape (3,2), rank 3: all nine
// vertices, then its four atom blocks in the order id, s2, s1, s1*s2.
const TableauList& figure1_demazure();
const TableauList& figure1_atom_id();
const TableauList& figure1_atom_s2();
const TableauList& figure1_atom_s1();
const TableauList& figure1_atom_s1s2();

// Five-element subset of the shape-(3,2) rank-3 crystal whose character is
// atom-positive although the subset is not a union of atom blocks.
const TableauList& weak_atom_subset();

// Seventeen-element extremal subset of the shape-(3,2) rank-4 crystal whose
// character has a negative atom coefficient.
const TableauList& figure2_subset();

// Shape (4,4,3,2), rank 6: a vertex lying at the top or bottom of each of its
// strings that still forces more of the crystal into any extremal superset,
// with the three displayed steps of the forcing chain.
const Tableau& obstruction_x();
const Tableau& obstruction_e2x();
const Tableau& obstruction_f3e2x();
const Tableau& obstruction_f3x();  // equals f2 f3 e2 of x

// Shape (3,1,1), rank 6: two 12-vertex sets with equal characters whose
// unions with the entries-at-most-5 component are both extremal.
const TableauList& character_twins_y1();
const TableauList& character_twins_y2();

}  // namespace crystals::golden
