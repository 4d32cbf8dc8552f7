#include "crystals/golden.hpp"

namespace crystals::golden {

namespace {

Tableau tab(std::vector<std::vector<int>> rows) { return Tableau(std::move(rows)); }

}  // namespace

const TableauList& figure1_demazure() {
  static const TableauList data = {
      tab({{1, 1, 1}, {2, 2}}), tab({{1, 1, 1}, {2, 3}}), tab({{1, 1, 1}, {3, 3}}),
      tab({{1, 1, 2}, {2, 2}}), tab({{1, 1, 2}, {2, 3}}), tab({{1, 1, 2}, {3, 3}}),
      tab({{1, 2, 2}, {2, 3}}), tab({{1, 2, 2}, {3, 3}}), tab({{2, 2, 2}, {3, 3}}),
  };
  return data;
}

const TableauList& figure1_atom_id() {
  static const TableauList data = {tab({{1, 1, 1}, {2, 2}})};
  return data;
}

const TableauList& figure1_atom_s2() {
  static const TableauList data = {tab({{1, 1, 1}, {2, 3}}), tab({{1, 1, 1}, {3, 3}})};
  return data;
}

const TableauList& figure1_atom_s1() {
  static const TableauList data = {tab({{1, 1, 2}, {2, 2}})};
  return data;
}

const TableauList& figure1_atom_s1s2() {
  static const TableauList data = {
      tab({{1, 1, 2}, {2, 3}}), tab({{1, 2, 2}, {2, 3}}), tab({{1, 1, 2}, {3, 3}}),
      tab({{1, 2, 2}, {3, 3}}), tab({{2, 2, 2}, {3, 3}}),
  };
  return data;
}

const TableauList& weak_atom_subset() {
  static const TableauList data = {
      tab({{1, 1, 1}, {2, 2}}), tab({{1, 1, 1}, {2, 3}}), tab({{1, 1, 2}, {2, 3}}),
      tab({{1, 2, 2}, {2, 3}}), tab({{1, 1, 1}, {3, 3}}),
  };
  return data;
}

const TableauList& figure2_subset() {
  static const TableauList data = {
      tab({{1, 1, 1}, {2, 2}}), tab({{1, 1, 1}, {2, 3}}), tab({{1, 1, 2}, {2, 3}}),
      tab({{1, 2, 2}, {2, 3}}), tab({{1, 1, 1}, {3, 3}}), tab({{1, 1, 2}, {3, 3}}),
      tab({{1, 2, 2}, {3, 3}}), tab({{2, 2, 2}, {3, 3}}), tab({{1, 1, 1}, {2, 4}}),
      tab({{1, 1, 1}, {3, 4}}), tab({{1, 1, 1}, {4, 4}}), tab({{1, 1, 2}, {3, 4}}),
      tab({{1, 2, 2}, {3, 4}}), tab({{2, 2, 2}, {3, 4}}), tab({{1, 1, 2}, {4, 4}}),
      tab({{1, 2, 2}, {4, 4}}), tab({{2, 2, 2}, {4, 4}}),
  };
  return data;
}

const Tableau& obstruction_x() {
  static const Tableau data = tab({{1, 2, 3, 3}, {2, 3, 4, 4}, {3, 4, 5}, {5, 6}});
  return data;
}

const Tableau& obstruction_e2x() {
  static const Tableau data = tab({{1, 2, 2, 3}, {2, 3, 4, 4}, {3, 4, 5}, {5, 6}});
  return data;
}

const Tableau& obstruction_f3e2x() {
  static const Tableau data = tab({{1, 2, 2, 3}, {2, 3, 4, 4}, {4, 4, 5}, {5, 6}});
  return data;
}

const Tableau& obstruction_f3x() {
  static const Tableau data = tab({{1, 2, 3, 3}, {2, 3, 4, 4}, {4, 4, 5}, {5, 6}});
  return data;
}

const TableauList& character_twins_y1() {
  static const TableauList data = {
      tab({{1, 1, 1}, {2}, {6}}), tab({{1, 1, 2}, {2}, {6}}), tab({{1, 2, 2}, {2}, {6}}),
      tab({{1, 1, 3}, {2}, {6}}), tab({{1, 1, 3}, {3}, {6}}), tab({{1, 2, 3}, {2}, {6}}),
      tab({{1, 3, 3}, {2}, {6}}), tab({{1, 3, 3}, {3}, {6}}), tab({{1, 1, 6}, {2}, {3}}),
      tab({{1, 2, 6}, {2}, {3}}), tab({{1, 1, 6}, {2}, {4}}), tab({{1, 2, 6}, {2}, {4}}),
  };
  return data;
}

const TableauList& character_twins_y2() {
  static const TableauList data = {
      tab({{1, 1, 1}, {2}, {6}}), tab({{1, 1, 2}, {2}, {6}}), tab({{1, 2, 2}, {2}, {6}}),
      tab({{1, 1, 3}, {2}, {6}}), tab({{1, 1, 3}, {3}, {6}}), tab({{1, 2, 3}, {2}, {6}}),
      tab({{1, 3, 3}, {2}, {6}}), tab({{1, 3, 3}, {3}, {6}}), tab({{1, 1, 4}, {2}, {6}}),
      tab({{1, 2, 4}, {2}, {6}}), tab({{1, 1, 6}, {2}, {3}}), tab({{1, 2, 6}, {2}, {3}}),
  };
  return data;
}

}  // namespace crystals::golden
