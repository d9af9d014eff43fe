#include "bellsu11/algebra/catalog.h"

#include <sstream>
#include <utility>

namespace bellsu11::algebra {

namespace {

const ComplexRational kI = ComplexRational::i();

std::string pair_suffix(int i, int j) { return "_" + std::to_string(i) + std::to_string(j); }

// Two-boson su(2): J_x = (c_i^dag c_j + c_i c_j^dag)/2, J_y = (c_i^dag c_j - c_i c_j^dag)/2i,
// J_z = (n_i - n_j)/2. For i != j, c_i c_j^dag = c_j^dag c_i.
QuadOp jx(int i, int j) { return frac(1, 2) * (C(i, j) + C(j, i)); }
QuadOp jy(int i, int j) { return -kI * frac(1, 2) * (C(i, j) - C(j, i)); }
QuadOp jz(int i, int j) { return frac(1, 2) * (C(i, i) - C(j, j)); }

// One-boson su(1,1) for degenerate down-conversion.
QuadOp kx1(int i) { return frac(1, 4) * (A(i, i) + B(i, i)); }
QuadOp ky1(int i) { return -kI * frac(1, 4) * (A(i, i) - B(i, i)); }
QuadOp kz1(int i) { return frac(1, 2) * C(i, i); }

// Two-boson su(1,1); K_z = (c_i^dag c_i + c_j c_j^dag)/2 = (C_ii + C_jj)/2.
QuadOp kx2(int i, int j) { return frac(1, 2) * (A(i, j) + B(i, j)); }
QuadOp ky2(int i, int j) { return -kI * frac(1, 2) * (A(i, j) - B(i, j)); }
QuadOp kz2(int i, int j) { return frac(1, 2) * (C(i, i) + C(j, j)); }

// c_i^dag c_i
QuadOp number(int i) { return C(i, i) - QuadOp::identity(frac(1, 2)); }

std::vector<CatalogEntry> build_standard() {
  std::vector<CatalogEntry> out;
  auto add = [&out](std::string name, QuadOp op, Role role, std::string note = {}) {
    out.push_back({std::move(name), std::move(op), role, std::move(note)});
  };
  constexpr auto G = Role::kGenerator;

  for (int i = 1; i <= kNumModes; ++i) {
    for (int j = i + 1; j <= kNumModes; ++j) {
      const auto s = pair_suffix(i, j);
      add("J_x" + s, jx(i, j), G, "two-boson su(2)");
      add("J_y" + s, jy(i, j), G, "two-boson su(2)");
      add("J_z" + s, jz(i, j), G, "two-boson su(2)");
    }
  }
  for (int i = 1; i <= kNumModes; ++i) {
    const auto s = "_" + std::to_string(i);
    add("K_x" + s, kx1(i), G, "one-boson su(1,1), degenerate PDC");
    add("K_y" + s, ky1(i), G, "one-boson su(1,1), degenerate PDC");
    add("K_z" + s, kz1(i), G, "one-boson su(1,1), degenerate PDC");
  }
  for (int i = 1; i <= kNumModes; ++i) {
    for (int j = i + 1; j <= kNumModes; ++j) {
      const auto s = pair_suffix(i, j);
      add("K_x" + s, kx2(i, j), G, "two-boson su(1,1), nondegenerate PDC");
      add("K_y" + s, ky2(i, j), G, "two-boson su(1,1), nondegenerate PDC");
      add("K_z" + s, kz2(i, j), G, "two-boson su(1,1), nondegenerate PDC");
    }
  }

  // Entangled-pair source, written out term by term rather than as the
  // K^(14) -/+ K^(23) sums so that the sum rule stays a checkable identity.
  add("K_x", frac(1, 2) * (A(1, 4) - A(2, 3) + B(1, 4) - B(2, 3)), G, "four-boson su(1,1), singlet source");
  add("K_y", -kI * frac(1, 2) * (A(1, 4) - A(2, 3) - B(1, 4) + B(2, 3)), G, "four-boson su(1,1), singlet source");
  add("K_z", frac(1, 2) * (C(1, 1) + C(4, 4) + C(2, 2) + C(3, 3)), G, "four-boson su(1,1), singlet source");

  add("J_BS", frac(1, 2) * (C(1, 3) + C(3, 1) + C(2, 4) + C(4, 2)), G, "polarization-independent beam splitter");
  add("J_PS", frac(1, 2) * (C(1, 1) - C(3, 3) + C(2, 2) - C(4, 4)), G, "polarization-independent phase shifter");
  add("J_a", jx(1, 2), G, "polarization rotator, channel a");
  add("J_b", jx(3, 4), G, "polarization rotator, channel b");

  // Ideal test.
  add("K", frac(1, 2) * (A(1, 4) - A(2, 3) + B(1, 4) - B(2, 3)), G, "ideal-test source; equals K_x");
  add("J", jx(1, 2) - jx(3, 4), G, "polarization difference J_a - J_b");
  add("L", -kI * frac(1, 2) * (A(2, 4) - A(1, 3) - B(2, 4) + B(1, 3)), G, "closes {J, K, L}");

  // Wave-number entangled test; modes 1..4 carry k1, k4, k2, k3.
  add("K_prime", frac(1, 2) * (A(1, 4) + A(2, 3) + B(1, 4) + B(2, 3)), G, "wave-number entangled source");
  add("J_PS_a", jz(1, 2), G, "phase shifter, channel a");
  add("J_PS_b", jz(3, 4), G, "phase shifter, channel b");
  add("J_prime", jz(1, 2) - jz(3, 4), G, "phase-shift difference J_PS_a - J_PS_b");
  add("L_prime", -kI * frac(1, 2) * (A(1, 4) - A(2, 3) - B(1, 4) + B(2, 3)), G, "closes {J', K', L'}");

  // Post-selected (type-I) test.
  add("K_OM", kx2(1, 3), G, "type-I PDC, equals K_x_13");
  add("K_OM_prime",
      frac(1, 4) * (A(2, 3) - A(1, 2) + A(3, 4) - A(1, 4) + B(2, 3) - B(1, 2) + B(3, 4) - B(1, 4)), G,
      "type-I pair after 90 degree rotation and 50/50 mixing, as printed");
  add("K_OM_1", frac(1, 4) * (A(2, 3) - A(1, 4) + B(2, 3) - B(1, 4)), G, "singlet part of K_OM_prime");
  add("K_OM_2", frac(1, 4) * (A(3, 4) - A(1, 2) + B(3, 4) - B(1, 2)), G, "same-channel part of K_OM_prime");

  constexpr auto O = Role::kObservable;
  add("sigma_z_a", C(1, 1) - C(2, 2), O, "n_a+ - n_a-");
  add("sigma_z_b", C(3, 3) - C(4, 4), O, "n_b+ - n_b-");
  add("sigma_0_a", number(1) + number(2), O, "n_a+ + n_a-");
  add("sigma_0_b", number(3) + number(4), O, "n_b+ + n_b-");
  add("sigma_y_a", -kI * (C(1, 2) - C(2, 1)), O,
      "convention: -i(a+^dag a- - a-^dag a+) = 2 J_y_12; not defined in the source construction");
  add("sigma_y_b", -kI * (C(3, 4) - C(4, 3)), O, "convention: -i(b+^dag b- - b-^dag b+) = 2 J_y_34");

  constexpr auto D = Role::kDerived;
  const QuadOp sza = C(1, 1) - C(2, 2), szb = C(3, 3) - C(4, 4);
  const QuadOp sya = -kI * (C(1, 2) - C(2, 1)), syb = -kI * (C(3, 4) - C(4, 3));
  const QuadOp s0a = number(1) + number(2), s0b = number(3) + number(4);
  add("J_z_plus", sza + szb, D);
  add("J_z_minus", sza - szb, D);
  add("J_y_plus", sya + syb, D);
  add("J_y_minus", sya - syb, D);
  add("N_0_plus", s0a + s0b, D);
  add("N_0_minus", s0a - s0b, D);
  add("L_hat_z", -kI * frac(1, 2) * (A(1, 4) + A(2, 3) - B(1, 4) + B(2, 3)), D, "transcribed as printed");
  add("L_hat_y", frac(1, 2) * (A(2, 4) + A(1, 3) + B(2, 4) + B(1, 3)), D, "transcribed as printed");
  add("L_hat_0", kI * frac(1, 2) * (A(1, 4) - A(2, 3) - B(1, 4) + B(2, 3)), D, "transcribed as printed");
  return out;
}

}  // namespace

const char* role_name(Role role) {
  switch (role) {
    case Role::kGenerator:
      return "generator";
    case Role::kObservable:
      return "observable";
    case Role::kDerived:
      return "derived";
  }
  return "?";
}

UnknownGeneratorError::UnknownGeneratorError(const std::string& name, const std::vector<std::string>& valid)
    : std::out_of_range([&] {
        std::ostringstream os;
        os << "unknown generator '" << name << "'; valid names:";
        for (const auto& v : valid) os << ' ' << v;
        return os.str();
      }()),
      name_(name) {}

GeneratorCatalog::GeneratorCatalog(std::vector<CatalogEntry> entries) : entries_(std::move(entries)) {
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    if (!index_.emplace(entries_[k].name, k).second) {
      throw std::invalid_argument("duplicate catalog name '" + entries_[k].name + "'");
    }
  }
}

const GeneratorCatalog& GeneratorCatalog::standard() {
  static const GeneratorCatalog catalog(build_standard());
  return catalog;
}

const CatalogEntry& GeneratorCatalog::entry(std::string_view name) const {
  const auto it = index_.find(name);
  if (it == index_.end()) throw UnknownGeneratorError(std::string(name), names());
  return entries_[it->second];
}

const QuadOp& GeneratorCatalog::at(std::string_view name) const { return entry(name).op; }

bool GeneratorCatalog::contains(std::string_view name) const { return index_.find(name) != index_.end(); }

std::vector<std::string> GeneratorCatalog::names() const {
  std::vector<std::string> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back(e.name);
  return out;
}

nlohmann::json coefficient_json(const ComplexRational& c) {
  return {{"re_num", c.re().numerator()},
          {"re_den", c.re().denominator()},
          {"im_num", c.im().numerator()},
          {"im_den", c.im().denominator()}};
}

nlohmann::json to_json(const CatalogEntry& entry) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& [e, c] : entry.op.terms()) {
    nlohmann::json term = coefficient_json(c);
    term["kind"] = kind_name(e.kind);
    term["i"] = e.i;
    term["j"] = e.j;
    coeffs.push_back(std::move(term));
  }
  return {{"name", entry.name},
          {"role", role_name(entry.role)},
          {"hermitian", is_hermitian(entry.op)},
          {"coefficients", std::move(coeffs)},
          {"scalar", coefficient_json(entry.op.scalar())},
          {"note", entry.note}};
}

nlohmann::json to_json(const GeneratorCatalog& catalog) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& e : catalog.entries()) out.push_back(to_json(e));
  return out;
}

namespace {

std::int64_t integer_field(const nlohmann::json& j, const char* key, std::int64_t fallback) {
  if (!j.contains(key)) return fallback;
  if (!j.at(key).is_number_integer()) throw CatalogFormatError(std::string("field '") + key + "' must be an integer");
  return j.at(key).get<std::int64_t>();
}

ComplexRational coefficient_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw CatalogFormatError("coefficient must be an object");
  const auto rd = integer_field(j, "re_den", 1), id = integer_field(j, "im_den", 1);
  if (rd == 0 || id == 0) throw CatalogFormatError("zero denominator in coefficient");
  return {Rational(integer_field(j, "re_num", 0), rd), Rational(integer_field(j, "im_num", 0), id)};
}

Role role_from_name(const std::string& s) {
  if (s == "generator") return Role::kGenerator;
  if (s == "observable") return Role::kObservable;
  if (s == "derived") return Role::kDerived;
  throw CatalogFormatError("unknown role '" + s + "'");
}

Kind kind_from_name(const std::string& s) {
  if (s == "A") return Kind::kPairCreate;
  if (s == "C") return Kind::kMixed;
  if (s == "B") return Kind::kPairAnnihilate;
  throw CatalogFormatError("unknown basis kind '" + s + "'");
}

}  // namespace

GeneratorCatalog catalog_from_json(const nlohmann::json& doc) {
  if (!doc.is_array()) throw CatalogFormatError("catalog document must be an array of entries");
  std::vector<CatalogEntry> entries;
  for (const auto& e : doc) {
    if (!e.is_object() || !e.contains("name") || !e.at("name").is_string())
      throw CatalogFormatError("catalog entry needs a string 'name'");
    CatalogEntry entry;
    entry.name = e.at("name").get<std::string>();
    if (e.contains("role")) entry.role = role_from_name(e.at("role").get<std::string>());
    if (e.contains("note") && e.at("note").is_string()) entry.note = e.at("note").get<std::string>();
    if (e.contains("coefficients")) {
      for (const auto& t : e.at("coefficients")) {
        if (!t.contains("kind") || !t.at("kind").is_string()) throw CatalogFormatError("coefficient needs a 'kind'");
        const int i = static_cast<int>(integer_field(t, "i", 0)), j = static_cast<int>(integer_field(t, "j", 0));
        BasisElement b;
        try {
          switch (kind_from_name(t.at("kind").get<std::string>())) {
            case Kind::kPairCreate: b = BasisElement::A(i, j); break;
            case Kind::kMixed: b = BasisElement::C(i, j); break;
            case Kind::kPairAnnihilate: b = BasisElement::B(i, j); break;
          }
        } catch (const std::out_of_range& ex) {
          throw CatalogFormatError(ex.what());
        }
        entry.op.add(b, coefficient_from_json(t));
      }
    }
    if (e.contains("scalar")) entry.op.add_scalar(coefficient_from_json(e.at("scalar")));
    entries.push_back(std::move(entry));
  }
  try {
    return GeneratorCatalog(std::move(entries));
  } catch (const std::invalid_argument& ex) {
    throw CatalogFormatError(ex.what());
  }
}

}  // namespace bellsu11::algebra
