#ifndef FINESETS_EXPR_HPP
#define FINESETS_EXPR_HPP

#include <cctype>
#include <string>
#include <vector>

#include "finesets/grid.hpp"
#include "finesets/permset.hpp"
#include "finesets/tableau.hpp"

namespace finesets {

namespace detail {

class ExprParser {
 public:
  explicit ExprParser(const std::string& text) : s_(text) {}

  PermMultiset parse_all() {
    PermMultiset r = expr();
    skip();
    if (i_ != s_.size()) throw ParseError("unexpected trailing input", i_, {"end of input"});
    return r;
  }

 private:
  static const std::vector<std::string>& names() {
    static const std::vector<std::string> v{"S",       "C",     "arc",   "L",       "colayer", "D",      "Dinv",
                                            "R",       "Rinv",  "onecol", "grid",   "knuth",   "conj",   "invfix",
                                            "cdesinv", "desinv", "ball", "embed",   "prod",    "setprod", "inv",
                                            "union"};
    return v;
  }

  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }

  void expect(char ch) {
    skip();
    if (i_ >= s_.size() || s_[i_] != ch) {
      throw ParseError(i_ >= s_.size() ? "unexpected end of input" : "unexpected character", i_,
                       {std::string("'") + ch + "'"});
    }
    ++i_;
  }

  int integer() {
    skip();
    std::size_t start = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (start == i_) throw ParseError("expected an integer", i_, {"integer"});
    if (i_ - start > 6) throw ParseError("integer too large", start);
    return std::stoi(s_.substr(start, i_ - start));
  }

  std::string quoted() {
    skip();
    if (i_ >= s_.size() || s_[i_] != '"') throw ParseError("expected a quoted string", i_, {"'\"'"});
    std::size_t start = ++i_;
    while (i_ < s_.size() && s_[i_] != '"') ++i_;
    if (i_ >= s_.size()) throw ParseError("unterminated string", start - 1, {"'\"'"});
    return s_.substr(start, i_++ - start);
  }

  DescSet desc_set(int n) {
    skip();
    std::size_t at = i_;
    expect('{');
    std::vector<int> members;
    skip();
    if (i_ < s_.size() && s_[i_] == '}') {
      ++i_;
    } else {
      for (;;) {
        members.push_back(integer());
        skip();
        if (i_ < s_.size() && s_[i_] == ',') {
          ++i_;
          continue;
        }
        expect('}');
        break;
      }
    }
    try {
      return DescSet::from_members(n, members);
    } catch (const DomainError& e) {
      throw ParseError(e.what(), at);
    }
  }

  int degree(int n, std::size_t at) {
    if (n < 1 || n > kMaxDegree) {
      throw ParseError("degree must be in [1," + std::to_string(kMaxDegree) + "]", at);
    }
    return n;
  }

  PermMultiset expr() {
    skip();
    std::size_t start = i_;
    while (i_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[i_]))) ++i_;
    std::string name = s_.substr(start, i_ - start);
    if (name.empty()) throw ParseError("expected a set expression", start, names());
    expect('(');
    PermMultiset r = call(name, start);
    expect(')');
    return r;
  }

  PermMultiset call(const std::string& name, std::size_t at) {
    auto two_ints = [&](int& a, int& b) {
      a = integer();
      expect(',');
      b = integer();
    };
    if (name == "S") return symmetric_group(degree(integer(), at));
    if (name == "C") return cyclic_group(degree(integer(), at));
    if (name == "arc") {
      int n = degree(integer(), at);
      return multiset_union(enumerate_grid(named_grids::arc_first(), n), enumerate_grid(named_grids::arc_second(), n))
          .underlying_set();
    }
    if (name == "L") return enumerate_grid(named_grids::left_unimodal(), degree(integer(), at));
    if (name == "colayer") {
      int k, n;
      two_ints(k, n);
      if (k < 1) throw ParseError("colayer needs k >= 1", at);
      return enumerate_grid(identity_matrix(k), degree(n, at));
    }
    if (name == "D" || name == "Dinv" || name == "R" || name == "Rinv") {
      int n = degree(integer(), at);
      expect(',');
      DescSet j = desc_set(n);
      DescentKind kind = name == "D" ? DescentKind::D
                         : name == "Dinv" ? DescentKind::Dinv
                         : name == "R"    ? DescentKind::R
                                          : DescentKind::Rinv;
      return descent_class(n, j, kind);
    }
    if (name == "onecol" || name == "grid") {
      std::size_t q = i_;
      std::string text = quoted();
      expect(',');
      int n = degree(integer(), at);
      GridMatrix m;
      try {
        m = name == "onecol" ? one_column_matrix(parse_sign_vector(text)) : GridMatrix::parse(text);
      } catch (const ParseError& e) {
        throw ParseError(e.what(), q + 1 + e.position());
      }
      return enumerate_grid(m, n);
    }
    if (name == "knuth") {
      std::size_t q = i_;
      std::string text = quoted();
      try {
        return knuth_class(rsk(Permutation::parse(text)).first);
      } catch (const DomainError& e) {
        throw ParseError(e.what(), q);
      }
    }
    if (name == "conj") {
      std::size_t q = i_;
      std::string text = quoted();
      expect(',');
      int n = degree(integer(), at);
      Partition type;
      try {
        type = Partition::parse(text);
      } catch (const DomainError& e) {
        throw ParseError(e.what(), q);
      }
      if (type.size() != n) throw ParseError("cycle type does not have size n", q);
      return conjugacy_class(type);
    }
    if (name == "invfix" || name == "cdesinv" || name == "desinv" || name == "ball") {
      int n, k;
      two_ints(n, k);
      degree(n, at);
      if (name == "invfix") return fixed_inversions(n, k);
      if (name == "cdesinv") return fixed_inverse_cyclic_descents(n, k);
      if (name == "desinv") return fixed_inverse_descents(n, k);
      return length_ball(n, k);
    }
    if (name == "embed") {
      PermMultiset a = expr();
      expect(',');
      std::size_t q = i_;
      int n = degree(integer(), at);
      if (a.degree() != n - 1) throw ParseError("embed needs an expression of degree n-1", q);
      return embed(a, n);
    }
    if (name == "prod" || name == "setprod" || name == "union") {
      PermMultiset a = expr();
      expect(',');
      skip();
      std::size_t q = i_;
      PermMultiset b = expr();
      if (a.degree() != b.degree()) {
        throw ParseError("degree mismatch: " + std::to_string(a.degree()) + " vs " + std::to_string(b.degree()), q);
      }
      if (name == "union") return multiset_union(a, b);
      return product(a, b, name == "prod" ? ProductMode::multiset : ProductMode::set);
    }
    if (name == "inv") return inverse_multiset(expr());
    throw ParseError("unknown set constructor '" + name + "'", at, names());
  }

  std::string s_;
  std::size_t i_ = 0;
};

}  // namespace detail

/// Evaluates a set expression such as prod(C(5), knuth("2143")).
inline PermMultiset evaluate_expression(const std::string& text) { return detail::ExprParser(text).parse_all(); }

}  // namespace finesets

#endif  // FINESETS_EXPR_HPP
