#include "lounesto/symmetry.hpp"

#include <algorithm>
#include <sstream>

#include "lounesto/clifford.hpp"

namespace lounesto {

SymOperator identity_operator() { return {Matrix4::Identity(), false, "1"}; }

SymOperator charge_conjugation() { return {gamma(2), true, "C"}; }

SymOperator parity(const Momentum& p) { return {slash(p) / p.mass(), false, "P"}; }

SymOperator time_reversal() {
  Matrix4 sum = Matrix4::Zero();
  std::array<int, 4> idx{0, 1, 2, 3};
  do {
    const int e = epsilon(idx[0], idx[1], idx[2], idx[3]);
    sum += static_cast<double>(e) * gamma_upper(idx[0]) * gamma_upper(idx[1]) * gamma_upper(idx[2]) *
           gamma_upper(idx[3]);
  } while (std::next_permutation(idx.begin(), idx.end()));
  SymOperator prefactor = linear_operator(-sum / 24.0, "T");
  SymOperator t = compose(prefactor, charge_conjugation());
  t.label = "T";
  return t;
}

SymOperator compose(const SymOperator& a, const SymOperator& b) {
  SymOperator out;
  out.matrix = a.antilinear ? Matrix4(a.matrix * b.matrix.conjugate()) : Matrix4(a.matrix * b.matrix);
  out.antilinear = a.antilinear != b.antilinear;
  if (a.label == "1") {
    out.label = b.label;
  } else if (b.label == "1") {
    out.label = a.label;
  } else {
    out.label = a.label + "*" + b.label;
  }
  return out;
}

SymOperator scaled(const SymOperator& op, Complex c, std::string label) {
  return {c * op.matrix, op.antilinear, std::move(label)};
}

SymOperator linear_operator(const Matrix4& m, std::string label) { return {m, false, std::move(label)}; }

Vector4c apply(const SymOperator& op, const Vector4c& psi) {
  return op.antilinear ? Vector4c(op.matrix * psi.conjugate()) : Vector4c(op.matrix * psi);
}

bool same_operator(const SymOperator& a, const SymOperator& b, double tol) {
  return a.antilinear == b.antilinear && (a.matrix - b.matrix).cwiseAbs().maxCoeff() <= tol;
}

std::string to_string(Discrete d) {
  static const std::array<const char*, 8> names{"1", "P", "C", "T", "CP", "CT", "PT", "CPT"};
  return names[static_cast<std::size_t>(index_of(d))];
}

int index_of(Discrete d) { return static_cast<int>(d); }

std::optional<Discrete> parse_discrete(const std::string& text) {
  std::string t = text;
  if (t == "I" || t == "Id" || t == "id") t = "1";
  for (Discrete d : kAllDiscrete) {
    if (to_string(d) == t) return d;
  }
  return std::nullopt;
}

SymOperator discrete_operator(Discrete d, const Momentum& p) {
  const SymOperator c = charge_conjugation();
  const SymOperator t = time_reversal();
  const SymOperator pp = parity(p);
  SymOperator out;
  switch (d) {
    case Discrete::Identity:
      out = identity_operator();
      break;
    case Discrete::P:
      out = pp;
      break;
    case Discrete::C:
      out = c;
      break;
    case Discrete::T:
      out = t;
      break;
    case Discrete::CP:
      out = compose(c, pp);
      break;
    case Discrete::CT:
      out = compose(c, t);
      break;
    case Discrete::PT:
      out = compose(pp, t);
      break;
    case Discrete::CPT:
      out = compose(compose(c, pp), t);
      break;
  }
  out.label = to_string(d);
  return out;
}

std::string RelationEntry::text() const {
  if (!op) return "?";
  return (sign < 0 ? "-" : "") + to_string(*op);
}

RelationTable relation_table(const Momentum& p, double tol) {
  std::array<SymOperator, 8> ops;
  for (Discrete d : kAllDiscrete) ops[index_of(d)] = discrete_operator(d, p);

  RelationTable table;
  for (int r = 0; r < 8; ++r) {
    for (int c = 0; c < 8; ++c) {
      RelationEntry entry;
      entry.raw = compose(ops[r], ops[c]);
      for (Discrete d : kAllDiscrete) {
        const SymOperator& base = ops[index_of(d)];
        for (int s : {1, -1}) {
          if (same_operator(entry.raw, scaled(base, static_cast<double>(s), base.label), tol)) {
            entry.sign = s;
            entry.op = d;
          }
        }
      }
      table.cells[r][c] = entry;
    }
  }
  return table;
}

std::string RelationTable::markdown() const {
  std::ostringstream out;
  out << "| |";
  for (Discrete d : kAllDiscrete) out << ' ' << to_string(d) << " |";
  out << "\n|---|";
  for (std::size_t i = 0; i < 8; ++i) out << "---|";
  out << '\n';
  for (Discrete r : kAllDiscrete) {
    out << "| **" << to_string(r) << "** |";
    for (const auto& cell : cells[index_of(r)]) out << ' ' << cell.text() << " |";
    out << '\n';
  }
  return out.str();
}

std::string RelationTable::csv() const {
  std::ostringstream out;
  out << "row";
  for (Discrete d : kAllDiscrete) out << ',' << to_string(d);
  out << '\n';
  for (Discrete r : kAllDiscrete) {
    out << to_string(r);
    for (const auto& cell : cells[index_of(r)]) out << ',' << cell.text();
    out << '\n';
  }
  return out.str();
}

const std::array<std::array<std::string, 8>, 8>& reference_relation_table() {
  static const std::array<std::array<std::string, 8>, 8> table{{
      {"1", "P", "C", "T", "CP", "CT", "PT", "CPT"},
      {"P", "1", "-CP", "PT", "-C", "-CPT", "T", "-CT"},
      {"C", "CP", "1", "CT", "P", "T", "CPT", "PT"},
      {"T", "PT", "CT", "-1", "CPT", "-C", "-P", "-CP"},
      {"CP", "C", "-P", "CPT", "-1", "-PT", "CT", "-T"},
      {"CT", "CPT", "T", "-C", "PT", "-1", "-CP", "-P"},
      {"PT", "T", "-CPT", "-P", "-CT", "CP", "-1", "C"},
      {"CPT", "CT", "-PT", "-CP", "-T", "P", "-C", "1"},
  }};
  return table;
}

}  // namespace lounesto
