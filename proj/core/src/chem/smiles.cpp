//
// Project FuelGen - Copyright 2026 The FuelGen Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "fuelgen/chem/smiles.h"

#include <algorithm>
#include <array>
#include <numeric>
#include <string>
#include <vector>

#include "fuelgen/util/error.h"

namespace fuelgen {
namespace {
  enum class Token {
    kNone,
    kAtom,
    kRing,
    kBond,
    kOpen,
    kClose,
  };

  struct RingSlot {
    int atom = -1;
    int order = 0;
  };

  [[noreturn]] void fail(std::string_view smiles, std::size_t pos,
                         std::string_view what) {
    throw SyntaxError(std::string(what) + " at position " + std::to_string(pos)
                      + " in '" + std::string(smiles) + "'");
  }
}  // namespace

MolGraph parse_smiles(std::string_view smiles) {
  if (smiles.empty())
    throw SyntaxError("empty SMILES");

  MolGraph g;
  std::vector<int> branch_stack;
  std::array<RingSlot, 10> rings {};
  int prev = -1;
  int pending = 0;
  Token last = Token::kNone;
  // Token preceding a pending bond symbol; ring digits may only follow a
  // bond that itself follows an atom or ring digit.
  Token before_bond = Token::kNone;

  for (std::size_t pos = 0; pos < smiles.size(); ++pos) {
    const char c = smiles[pos];
    switch (c) {
    case 'C':
    case 'O': {
      int atom = g.add_atom(c == 'C' ? Element::kCarbon : Element::kOxygen);
      if (prev >= 0)
        g.add_bond(prev, atom, pending == 0 ? 1 : pending);
      prev = atom;
      pending = 0;
      last = Token::kAtom;
      break;
    }
    case '=':
    case '#':
      if (last == Token::kNone || last == Token::kBond)
        fail(smiles, pos, "misplaced bond symbol");
      pending = c == '=' ? 2 : 3;
      before_bond = last;
      last = Token::kBond;
      break;
    case '(':
      if (last != Token::kAtom && last != Token::kRing
          && last != Token::kClose)
        fail(smiles, pos, "misplaced branch");
      branch_stack.push_back(prev);
      last = Token::kOpen;
      break;
    case ')':
      if (branch_stack.empty())
        fail(smiles, pos, "unbalanced ')'");
      if (last != Token::kAtom && last != Token::kRing
          && last != Token::kClose)
        fail(smiles, pos, last == Token::kBond ? "dangling bond symbol"
                                               : "empty branch");
      prev = branch_stack.back();
      branch_stack.pop_back();
      last = Token::kClose;
      break;
    default:
      if (c >= '1' && c <= '9') {
        const bool after_atom = last == Token::kAtom || last == Token::kRing;
        const bool after_bond = last == Token::kBond
                                && (before_bond == Token::kAtom
                                    || before_bond == Token::kRing);
        if (!after_atom && !after_bond)
          fail(smiles, pos, "misplaced ring digit");

        RingSlot &slot = rings[c - '0'];
        if (slot.atom < 0) {
          slot.atom = prev;
          slot.order = pending;
        } else {
          if (slot.order != 0 && pending != 0 && slot.order != pending)
            fail(smiles, pos, "conflicting ring bond orders");
          if (slot.atom == prev)
            fail(smiles, pos, "ring closure onto the same atom");
          if (g.bond_order(slot.atom, prev) != 0)
            fail(smiles, pos, "ring closure duplicates a bond");
          int order = std::max(slot.order, pending);
          g.add_bond(slot.atom, prev, order == 0 ? 1 : order);
          slot = RingSlot {};
        }
        pending = 0;
        last = Token::kRing;
        break;
      }
      fail(smiles, pos, std::string("character '") + c + "' outside grammar");
    }
  }

  if (last == Token::kBond)
    fail(smiles, smiles.size(), "dangling bond symbol");
  if (!branch_stack.empty())
    fail(smiles, smiles.size(), "unclosed branch");
  for (const RingSlot &slot: rings) {
    if (slot.atom >= 0)
      fail(smiles, smiles.size(), "unmatched ring digit");
  }
  return g;
}

namespace {
  class Writer {
  public:
    Writer(const MolGraph &g, std::span<const int> priority)
        : g_(g), priority_(priority), visited_(g.num_atoms(), 0),
          children_(g.num_atoms()), opens_(g.num_atoms()),
          closes_(g.num_atoms()), bond_used_(g.num_bonds(), 0) { }

    std::string run(int start) {
      traverse(start, -1);
      emit(start, 0);
      return std::move(out_);
    }

  private:
    std::vector<Neighbor> sorted_neighbors(int atom) const {
      auto span = g_.neighbors(atom);
      std::vector<Neighbor> nei(span.begin(), span.end());
      std::sort(nei.begin(), nei.end(),
                [&](const Neighbor &a, const Neighbor &b) {
                  return priority_[a.atom] < priority_[b.atom];
                });
      return nei;
    }

    void traverse(int atom, int via_bond) {
      visited_[atom] = 1;
      if (via_bond >= 0)
        bond_used_[via_bond] = 1;
      for (const Neighbor &nei: sorted_neighbors(atom)) {
        if (bond_used_[nei.bond])
          continue;
        if (visited_[nei.atom]) {
          // Back edge: nei.atom is an ancestor, this atom closes the ring.
          bond_used_[nei.bond] = 1;
          opens_[nei.atom].push_back(nei);
          opens_[nei.atom].back().atom = atom;
          closes_[atom].push_back(nei.bond);
          continue;
        }
        children_[atom].push_back(nei);
        traverse(nei.atom, nei.bond);
      }
    }

    static char bond_symbol(int order) {
      return order == 2 ? '=' : '#';
    }

    void put_digit(int digit) {
      if (digit < 10) {
        out_ += static_cast<char>('0' + digit);
      } else {
        out_ += '%';
        out_ += std::to_string(digit);
      }
    }

    void emit(int atom, int order) {
      if (order > 1)
        out_ += bond_symbol(order);
      out_ += element_symbol(g_.element(atom));

      for (int bond: closes_[atom]) {
        int digit = digit_of_bond_[bond];
        put_digit(digit);
        free_digits_.push_back(digit);
      }
      for (const Neighbor &ring: opens_[atom]) {
        int digit = take_digit();
        digit_of_bond_[ring.bond] = digit;
        if (ring.order > 1)
          out_ += bond_symbol(ring.order);
        put_digit(digit);
      }

      const auto &kids = children_[atom];
      for (std::size_t i = 0; i < kids.size(); ++i) {
        const bool last = i + 1 == kids.size();
        if (!last)
          out_ += '(';
        emit(kids[i].atom, kids[i].order);
        if (!last)
          out_ += ')';
      }
    }

    int take_digit() {
      if (free_digits_.empty())
        return ++max_digit_;
      auto it = std::min_element(free_digits_.begin(), free_digits_.end());
      int digit = *it;
      free_digits_.erase(it);
      return digit;
    }

    const MolGraph &g_;
    std::span<const int> priority_;
    std::vector<char> visited_;
    std::vector<std::vector<Neighbor>> children_;
    // opens_[ancestor] holds (descendant, order, bond) for each ring bond.
    std::vector<std::vector<Neighbor>> opens_;
    std::vector<std::vector<int>> closes_;
    std::vector<char> bond_used_;
    std::vector<int> free_digits_;
    std::vector<int> digit_of_bond_ = std::vector<int>(g_.num_bonds(), 0);
    int max_digit_ = 0;
    std::string out_;
  };
}  // namespace

std::string write_smiles(const MolGraph &g, int start,
                         std::span<const int> priority) {
  if (g.num_atoms() == 0)
    return {};
  return Writer(g, priority).run(start);
}

std::string random_smiles(const MolGraph &g, std::mt19937_64 &rng) {
  if (g.num_atoms() == 0)
    return {};
  std::vector<int> priority(g.num_atoms());
  std::iota(priority.begin(), priority.end(), 0);
  std::shuffle(priority.begin(), priority.end(), rng);
  std::uniform_int_distribution<int> pick(0, g.num_atoms() - 1);
  return write_smiles(g, pick(rng), priority);
}

}  // namespace fuelgen
