#include "umac/mass_tables.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cctype>
#include <fstream>
#include <sstream>

namespace umac {

namespace detail {
extern const std::string_view kMassTablesText;
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char b : bytes) {
    h ^= b;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::int64_t AffineExpr::eval(int n, int k, int c) const {
  const std::int64_t nn = half_n ? n / 2 : n;
  return a0 + an * nn + ak * k + ac * c;
}

namespace {

[[noreturn]] void syntax(int line, const std::string& what) {
  throw ConfigError("mass tables line " + std::to_string(line) + ": " + what);
}

AffineExpr parse_affine(const std::string& text, int line) {
  AffineExpr e;
  if (text == "n/2") {
    e.an = 1;
    e.half_n = true;
    return e;
  }
  std::size_t i = 0;
  if (text.empty()) syntax(line, "empty expression");
  while (i < text.size()) {
    int sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
    } else if (i != 0) {
      syntax(line, "bad expression '" + text + "'");
    }
    std::int64_t coeff = 1;
    bool digits = false;
    if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      coeff = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        coeff = coeff * 10 + (text[i] - '0');
        ++i;
        digits = true;
      }
    }
    char var = 0;
    if (i < text.size() && (text[i] == 'n' || text[i] == 'k' || text[i] == 'c')) var = text[i++];
    if (!digits && !var) syntax(line, "bad expression '" + text + "'");
    coeff *= sign;
    switch (var) {
      case 'n': e.an += coeff; break;
      case 'k': e.ak += coeff; break;
      case 'c': e.ac += coeff; break;
      default: e.a0 += coeff;
    }
  }
  return e;
}

std::string section_key(const RootSystem& R, DualFlag flag) {
  std::string name = R.family() == 'E' || R.family() == 'F' || R.family() == 'G'
                         ? R.label()
                         : std::string(1, R.family());
  return name + " " + (R.simply_laced() ? "any" : to_string(flag));
}

Rational scale_u(const UnitarySpec& s, MassScale sc) {
  switch (sc) {
    case MassScale::phi: return s.pair().u_phi();
    case MassScale::theta: return s.pair().u_theta();
    case MassScale::kappa: break;
  }
  return Rational(1);
}

template <class Real>
Real ipow(Real x, int p) {
  Real out(1);
  if (p >= 0)
    for (int i = 0; i < p; ++i) out *= x;
  else
    for (int i = 0; i < -p; ++i) out /= x;
  return out;
}

}  // namespace

MassTables MassTables::parse(std::string_view text) {
  MassTables t;
  const std::string marker = "# checksum fnv1a64 ";
  const auto pos = text.rfind(marker);
  if (pos == std::string_view::npos) throw ConfigError("mass tables: missing checksum trailer");
  if (pos != 0 && text[pos - 1] != '\n') throw ConfigError("mass tables: malformed checksum trailer");
  std::string hex(text.substr(pos + marker.size()));
  while (!hex.empty() && std::isspace(static_cast<unsigned char>(hex.back()))) hex.pop_back();
  std::uint64_t declared = 0;
  try {
    std::size_t used = 0;
    declared = std::stoull(hex, &used, 16);
    if (used != hex.size()) throw std::invalid_argument(hex);
  } catch (const std::exception&) {
    throw ConfigError("mass tables: unreadable checksum '" + hex + "'");
  }
  const std::string_view body = text.substr(0, pos);
  t.checksum_ = fnv1a64(body);
  if (t.checksum_ != declared) throw ConfigError("mass tables: checksum mismatch");

  std::istringstream in{std::string(body)};
  std::string raw;
  std::string current;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    std::vector<std::string> tok;
    for (std::string w; ls >> w;) tok.push_back(w);
    if (tok.empty()) continue;
    if (tok[0].front() == '[') {
      if (tok.size() != 2 || tok[1].back() != ']') syntax(line, "bad section header");
      current = tok[0].substr(1) + " " + tok[1].substr(0, tok[1].size() - 1);
      if (t.sections_.count(current)) syntax(line, "duplicate section " + current);
      t.sections_[current];
      continue;
    }
    if (current.empty()) syntax(line, "factor outside a section");
    if (tok.size() != 7) syntax(line, "expected 7 fields");
    MassFactorSpec f;
    f.line = line;
    if (tok[0] == "phi") f.scale = MassScale::phi;
    else if (tok[0] == "theta") f.scale = MassScale::theta;
    else if (tok[0] == "kappa") f.scale = MassScale::kappa;
    else syntax(line, "unknown scale '" + tok[0] + "'");
    if (tok[1] != "-") {
      if (tok[1].rfind("k=", 0) != 0) syntax(line, "bad range");
      const auto dots = tok[1].find("..");
      if (dots == std::string::npos) syntax(line, "bad range");
      f.ranged = true;
      f.lo = parse_affine(tok[1].substr(2, dots - 2), line);
      f.hi = parse_affine(tok[1].substr(dots + 2), line);
    }
    f.c0 = parse_affine(tok[2], line);
    f.c_theta = parse_affine(tok[3], line);
    f.c_phi = parse_affine(tok[4], line);
    f.length = parse_affine(tok[5], line);
    if (tok[6] == "1" || tok[6] == "+1") f.power = 1;
    else if (tok[6] == "-1") f.power = -1;
    else if (tok[6] == "2" || tok[6] == "+2") f.power = 2;
    else if (tok[6] == "-2") f.power = -2;
    else syntax(line, "power must be +-1 or +-2");
    t.sections_[current].push_back(f);
  }
  return t;
}

MassTables MassTables::load_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open mass tables '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

const MassTables& MassTables::builtin() {
  static const MassTables t = parse(detail::kMassTablesText);
  return t;
}

bool MassTables::has(const RootSystem& R, DualFlag flag) const {
  return sections_.count(section_key(R, flag)) > 0;
}

std::vector<MassFactor> MassTables::factors(const RootSystem& R, DualFlag flag, int c) const {
  const auto it = sections_.find(section_key(R, flag));
  if (it == sections_.end()) throw ConfigError("no mass table for " + section_key(R, flag));
  const int n = R.rank();
  std::vector<MassFactor> out;
  for (const auto& f : it->second) {
    std::int64_t lo = 0, hi = 0;
    if (f.ranged) {
      lo = f.lo.eval(n, 0, c);
      hi = f.hi.eval(n, 0, c);
    }
    for (std::int64_t k = lo; k <= hi; ++k) {
      MassFactor m;
      m.scale = f.scale;
      m.c0 = Rational(f.c0.eval(n, k, c));
      m.c_theta = Rational(f.c_theta.eval(n, k, c));
      m.c_phi = Rational(f.c_phi.eval(n, k, c));
      m.length = static_cast<int>(f.length.eval(n, k, c));
      m.power = f.power;
      if (m.length < 0) syntax(f.line, "negative length");
      out.push_back(m);
    }
  }
  return out;
}

template <class Real>
Real table_Nc(const UnitarySpec& s, const MassTables& tables) {
  const Rational gt = s.g_theta(), gp = s.g_phi();
  Real prod(1);
  for (const auto& f : tables.factors(s.R(), s.pair().flag(), s.c())) {
    const Rational u = scale_u(s, f.scale);
    const Rational a = f.c0 + f.c_theta * gt + f.c_phi * gp;
    prod *= ipow(pochhammer<Real>(s, u, a, f.length), f.power);
  }
  return prod;
}

bool ncrhat_applies(const UnitarySpec& s) {
  return s.R().simply_laced() || s.pair().flag() == DualFlag::dual;
}

template <class Real>
Real ncrhat_Nc(const UnitarySpec& s) {
  const RootSystem& R = s.R();
  Real num(1), den(1);
  for (int a = 0; a < R.num_positive_roots(); ++a) {
    const Rational u = s.pair().u(a);
    const Rational x = s.rho_pairing(a);
    num *= pochhammer<Real>(s, u, 1 + x, s.c() - 1);
    if (R.height(a) > 1) den *= pochhammer<Real>(s, u, 1 + x - s.g_of(a), s.c() - 1);
  }
  return num / den;
}

template <class Real>
Real exponent_Nc(const UnitarySpec& s) {
  if (s.g().g_short != s.g().g_long) throw ConfigError("exponent form needs equal labels");
  Real prod(1);
  for (int e : s.R().exponents())
    prod *= pochhammer<Real>(s, s.pair().u_phi(), 1 + s.g().g_short * e, s.c() - 1);
  return prod;
}

using Ext = boost::multiprecision::cpp_bin_float_50;
template double table_Nc<double>(const UnitarySpec&, const MassTables&);
template Ext table_Nc<Ext>(const UnitarySpec&, const MassTables&);
template double ncrhat_Nc<double>(const UnitarySpec&);
template Ext ncrhat_Nc<Ext>(const UnitarySpec&);
template double exponent_Nc<double>(const UnitarySpec&);
template Ext exponent_Nc<Ext>(const UnitarySpec&);

}  // namespace umac
