#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "affint/rational.hpp"

namespace affint {

// Sequences a : Z_{>0} -> Q feeding hhat^{a}(u).
struct SequenceSpec {
  enum class Tag { ONE, ONE_M, HALF_ONE, HALF_ONE2, CPOW2, TABLE };

  Tag tag = Tag::ONE;
  int m = 1;
  std::vector<Q> table;  // table[r-1] = a_r

  static SequenceSpec one() { return {}; }
  static SequenceSpec one_m(int m) {
    if (m < 1) throw std::invalid_argument("ONE_M needs m >= 1");
    return {Tag::ONE_M, m, {}};
  }
  static SequenceSpec half_one() { return {Tag::HALF_ONE, 1, {}}; }
  static SequenceSpec half_one2() { return {Tag::HALF_ONE2, 1, {}}; }
  static SequenceSpec cpow2() { return {Tag::CPOW2, 1, {}}; }
  static SequenceSpec from_table(std::vector<Q> t) { return {Tag::TABLE, 1, std::move(t)}; }

  bool defined_up_to(int n) const {
    return tag != Tag::TABLE || static_cast<int>(table.size()) >= n;
  }

  Q operator()(int r) const {
    if (r < 1) throw std::out_of_range("sequence index must be positive");
    switch (tag) {
      case Tag::ONE: return 1;
      case Tag::ONE_M: return r % m == 0 ? Q(m) : Q(0);
      case Tag::HALF_ONE: return q(1, 2);
      case Tag::HALF_ONE2: return r % 2 == 0 ? Q(1) : Q(0);
      case Tag::CPOW2: {
        Z p;
        mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(r - 1));
        return Q(p);
      }
      case Tag::TABLE:
        if (r > static_cast<int>(table.size())) throw std::out_of_range("sequence underspecified");
        return table[static_cast<std::size_t>(r - 1)];
    }
    return 0;
  }

  bool integer_valued_up_to(int n) const {
    for (int r = 1; r <= n; ++r)
      if (!is_integer((*this)(r))) return false;
    return true;
  }

  std::string name() const {
    switch (tag) {
      case Tag::ONE: return "one";
      case Tag::ONE_M: return "one_m(" + std::to_string(m) + ")";
      case Tag::HALF_ONE: return "half_one";
      case Tag::HALF_ONE2: return "half_one2";
      case Tag::CPOW2: return "cpow2";
      case Tag::TABLE: {
        std::string s = "table(";
        for (std::size_t i = 0; i < table.size(); ++i) s += (i ? "," : "") + table[i].get_str();
        return s + ")";
      }
    }
    return "?";
  }
};

}  // namespace affint
