#include "leibkit/format.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace leib {

namespace {

using Json = nlohmann::ordered_json;

struct LineReader {
  std::istringstream in;
  int lineno = 0;

  explicit LineReader(const std::string& text) : in(text) {}

  /// Next non-empty line with comments stripped, or nullopt at the end.
  std::optional<std::string> next() {
    std::string raw;
    while (std::getline(in, raw)) {
      ++lineno;
      auto hash = raw.find('#');
      if (hash != std::string::npos) raw.erase(hash);
      std::istringstream probe(raw);
      std::string tok;
      if (probe >> tok) return raw;
    }
    return std::nullopt;
  }
};

[[noreturn]] void bad(const LineReader& r, const std::string& msg) {
  throw FormatError(msg, r.lineno);
}

Scalar parse_coef(const FieldSpec& f, const std::string& tok,
                  const LineReader& r) {
  try {
    if (f.is_prime_field()) {
      std::size_t pos = 0;
      long long v = std::stoll(tok, &pos);
      if (pos != tok.size() || v < 0 || v >= f.p) {
        bad(r, "residue out of range: " + tok);
      }
      return Scalar::residue(f, v);
    }
    auto slash = tok.find('/');
    if (slash == std::string::npos) return Scalar::rational(BigInt(tok), 1);
    BigInt num(tok.substr(0, slash));
    BigInt den(tok.substr(slash + 1));
    if (den <= 0) bad(r, "denominator must be positive: " + tok);
    return Scalar::rational(num, den);
  } catch (const FormatError&) {
    throw;
  } catch (const std::exception&) {
    bad(r, "cannot parse coefficient: " + tok);
  }
}

}  // namespace

LeibnizAlgebra parse_algebra(const std::string& text, bool unchecked) {
  LineReader r(text);

  auto header = r.next();
  if (!header) bad(r, "empty file");
  {
    std::istringstream in(*header);
    std::string magic, version;
    in >> magic >> version;
    if (magic != "leibniz-sc" || version != "1") {
      bad(r, "expected header 'leibniz-sc 1'");
    }
  }

  FieldSpec field = FieldSpec::rationals();
  {
    auto line = r.next();
    if (!line) bad(r, "missing field line");
    std::istringstream in(*line);
    std::string kw, kind;
    in >> kw >> kind;
    if (kw != "field") bad(r, "expected 'field'");
    if (kind == "Q") {
      field = FieldSpec::rationals();
    } else if (kind == "GF") {
      long long p = 0;
      if (!(in >> p)) bad(r, "expected a prime after 'field GF'");
      try {
        field = FieldSpec::gf(p);
      } catch (const Error& e) {
        bad(r, e.what());
      }
    } else {
      bad(r, "unknown field kind: " + kind);
    }
  }

  std::size_t dim = 0;
  {
    auto line = r.next();
    if (!line) bad(r, "missing dim line");
    std::istringstream in(*line);
    std::string kw;
    long long n = -1;
    in >> kw >> n;
    if (kw != "dim" || n < 0) bad(r, "expected 'dim <n>'");
    dim = static_cast<std::size_t>(n);
  }

  std::vector<std::string> labels;
  std::vector<Scalar> tensor(dim * dim * dim, Scalar::zero(field));
  std::vector<bool> seen(dim * dim, false);

  auto parse_product = [&](const std::string& line) {
    std::istringstream in(line);
    std::string kw, colon;
    long long i = -1, j = -1;
    in >> kw >> i >> j >> colon;
    if (in.fail() || colon != ":") bad(r, "expected 'p <i> <j> :'");
    if (i < 0 || j < 0 || i >= static_cast<long long>(dim) ||
        j >= static_cast<long long>(dim)) {
      bad(r, "index out of range");
    }
    if (seen[i * dim + j]) bad(r, "duplicate product line");
    seen[i * dim + j] = true;
    std::string term;
    bool expect_term = true;
    while (in >> term) {
      if (!expect_term) {
        if (term != "+") bad(r, "expected '+' between terms");
        expect_term = true;
        continue;
      }
      auto star = term.find('*');
      if (star == std::string::npos) bad(r, "expected '<k>*<coef>'");
      long long k = -1;
      try {
        std::size_t pos = 0;
        k = std::stoll(term.substr(0, star), &pos);
        if (pos != star) k = -1;
      } catch (const std::exception&) {
        k = -1;
      }
      if (k < 0 || k >= static_cast<long long>(dim)) {
        bad(r, "component index out of range: " + term);
      }
      tensor[(i * dim + j) * dim + k] = parse_coef(field, term.substr(star + 1), r);
      expect_term = false;
    }
    if (expect_term) bad(r, "dangling '+' or empty product line");
  };

  bool basis_allowed = true;
  while (auto line = r.next()) {
    std::istringstream probe(*line);
    std::string kw;
    probe >> kw;
    if (kw == "basis") {
      if (!basis_allowed) bad(r, "basis line must precede product lines");
      std::string name;
      while (probe >> name) labels.push_back(name);
      if (labels.size() != dim) bad(r, "basis needs exactly one name per dimension");
      basis_allowed = false;
    } else if (kw == "p") {
      basis_allowed = false;
      parse_product(*line);
    } else {
      bad(r, "unknown directive: " + kw);
    }
  }

  if (unchecked) {
    return LeibnizAlgebra::unchecked(field, dim, std::move(tensor),
                                     std::move(labels));
  }
  return LeibnizAlgebra::checked(field, dim, std::move(tensor),
                                 std::move(labels));
}

LeibnizAlgebra parse_algebra_file(const std::string& path, bool unchecked) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_algebra(buf.str(), unchecked);
}

std::string emit_algebra(const LeibnizAlgebra& a) {
  std::ostringstream out;
  out << "leibniz-sc 1\n";
  if (a.field().is_prime_field()) {
    out << "field GF " << a.field().p << "\n";
  } else {
    out << "field Q\n";
  }
  out << "dim " << a.dim() << "\n";
  if (!a.labels().empty()) {
    out << "basis";
    for (const auto& l : a.labels()) out << " " << l;
    out << "\n";
  }
  std::vector<std::string> plines;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) {
      std::ostringstream line;
      bool any = false;
      for (std::size_t k = 0; k < a.dim(); ++k) {
        if (a.sc(i, j, k).is_zero()) continue;
        if (!any) {
          line << "p " << i << " " << j << " : ";
        } else {
          line << " + ";
        }
        line << k << "*" << a.sc(i, j, k).to_string();
        any = true;
      }
      if (any) plines.push_back(line.str());
    }
  }
  std::sort(plines.begin(), plines.end());
  for (const auto& l : plines) out << l << "\n";
  return out.str();
}

std::string format_vector(const Vec& v, const std::vector<std::string>& labels) {
  std::ostringstream out;
  bool any = false;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    if (any) out << " + ";
    std::string name =
        (labels.size() == v.size()) ? labels[i] : "b" + std::to_string(i);
    if (v[i].is_one()) {
      out << name;
    } else {
      out << v[i].to_string() << "*" << name;
    }
    any = true;
  }
  return any ? out.str() : "0";
}

std::string format_subspace(const Subspace& s,
                            const std::vector<std::string>& labels) {
  if (s.dim() == 0) return "0";
  std::ostringstream out;
  out << "span{";
  for (std::size_t i = 0; i < s.dim(); ++i) {
    if (i) out << ", ";
    out << format_vector(s.basis_row(i), labels);
  }
  out << "}";
  return out.str();
}

namespace {

std::string series_dims(const std::vector<Subspace>& terms) {
  std::ostringstream out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i) out << " -> ";
    out << terms[i].dim();
  }
  return out.str();
}

std::string unsupported_note(const StructureReport& rep) {
  return "unsupported(" +
         (rep.unsupported_reason.empty() ? std::string("unavailable")
                                         : rep.unsupported_reason) +
         ")";
}

template <typename T, typename Render>
std::string opt_field(const StructureReport& rep, const std::optional<T>& v,
                      Render&& render) {
  if (!v) return unsupported_note(rep);
  return render(*v);
}

Json subspace_json(const Subspace& s) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < s.dim(); ++i) {
    Json row = Json::array();
    for (const auto& c : s.basis_row(i)) row.push_back(c.to_string());
    rows.push_back(row);
  }
  return Json{{"dim", s.dim()}, {"basis", rows}};
}

Json series_json(const std::vector<Subspace>& terms) {
  Json arr = Json::array();
  for (const auto& t : terms) arr.push_back(subspace_json(t));
  return arr;
}

template <typename T, typename Render>
Json opt_json(const StructureReport& rep, const std::optional<T>& v,
              Render&& render) {
  if (!v) return unsupported_note(rep);
  return render(*v);
}

}  // namespace

std::string report_text(const StructureReport& rep) {
  const auto& lab = rep.labels;
  auto sub = [&](const Subspace& s) { return format_subspace(s, lab); };
  auto yesno = [](bool b) { return std::string(b ? "true" : "false"); };
  std::ostringstream out;
  out << "field: " << rep.field.to_string() << "\n";
  out << "dim: " << rep.dim << "\n";
  if (!lab.empty()) {
    out << "basis:";
    for (const auto& l : lab) out << " " << l;
    out << "\n";
  }
  out << "lie: " << yesno(rep.lie) << "\n";
  out << "nilpotent: " << yesno(rep.nilpotent);
  if (rep.nilpotent) out << " (class " << rep.nilpotency_class << ")";
  out << "\n";
  out << "solvable: " << yesno(rep.solvable);
  if (rep.solvable) out << " (derived length " << rep.derived_length << ")";
  out << "\n";
  out << "metabelian: " << yesno(rep.metabelian) << "\n";
  out << "A^2: " << sub(rep.square) << "\n";
  out << "lower central dims: " << series_dims(rep.lower_central) << "\n";
  out << "derived dims: " << series_dims(rep.derived) << "\n";
  out << "upper central dims: " << series_dims(rep.upper_central) << "\n";
  out << "Z(A): " << sub(rep.center) << "\n";
  out << "Z^l(A): " << sub(rep.left_center) << "\n";
  out << "Nil(A): " << opt_field(rep, rep.nil, sub) << "\n";
  out << "Rad(A): " << opt_field(rep, rep.rad, sub) << "\n";
  out << "Soc(A): " << opt_field(rep, rep.soc, sub) << "\n";
  out << "Asoc(A): " << opt_field(rep, rep.asoc, sub) << "\n";
  out << "F(A) = " << opt_field(rep, rep.frattini_subalgebra, sub) << "\n";
  out << "F is ideal: "
      << opt_field(rep, rep.frattini_subalgebra_is_ideal, yesno) << "\n";
  out << "Phi(A): " << opt_field(rep, rep.frattini_ideal, sub) << "\n";
  out << "maximal subalgebras: "
      << opt_field(rep, rep.maximal_subalgebra_count,
                   [](std::size_t n) { return std::to_string(n); })
      << "\n";
  out << "Cartan subalgebras: "
      << opt_field(rep, rep.cartan_count,
                   [](std::size_t n) { return std::to_string(n); })
      << "\n";
  out << "semisimple: " << opt_field(rep, rep.semisimple, yesno) << "\n";
  out << "elementary: " << opt_field(rep, rep.elementary, yesno) << "\n";
  return out.str();
}

std::string report_json(const StructureReport& rep) {
  Json j;
  j["field"] = rep.field.to_string();
  j["dim"] = rep.dim;
  j["basis"] = rep.labels;
  j["lie"] = rep.lie;
  j["nilpotent"] = rep.nilpotent;
  j["nilpotency_class"] =
      rep.nilpotent ? Json(rep.nilpotency_class) : Json(nullptr);
  j["solvable"] = rep.solvable;
  j["derived_length"] =
      rep.solvable ? Json(rep.derived_length) : Json(nullptr);
  j["metabelian"] = rep.metabelian;
  j["square"] = subspace_json(rep.square);
  j["lower_central"] = series_json(rep.lower_central);
  j["derived"] = series_json(rep.derived);
  j["upper_central"] = series_json(rep.upper_central);
  j["center"] = subspace_json(rep.center);
  j["left_center"] = subspace_json(rep.left_center);
  j["nilradical"] = opt_json(rep, rep.nil, subspace_json);
  j["radical"] = opt_json(rep, rep.rad, subspace_json);
  j["socle"] = opt_json(rep, rep.soc, subspace_json);
  j["abelian_socle"] = opt_json(rep, rep.asoc, subspace_json);
  j["frattini_subalgebra"] =
      opt_json(rep, rep.frattini_subalgebra, subspace_json);
  j["frattini_subalgebra_is_ideal"] = opt_json(
      rep, rep.frattini_subalgebra_is_ideal, [](bool b) { return Json(b); });
  j["frattini_ideal"] = opt_json(rep, rep.frattini_ideal, subspace_json);
  j["maximal_subalgebras"] =
      opt_json(rep, rep.maximal_subalgebra_count,
               [](std::size_t n) { return Json(n); });
  j["cartan_subalgebras"] = opt_json(
      rep, rep.cartan_count, [](std::size_t n) { return Json(n); });
  j["semisimple"] =
      opt_json(rep, rep.semisimple, [](bool b) { return Json(b); });
  j["elementary"] =
      opt_json(rep, rep.elementary, [](bool b) { return Json(b); });
  return j.dump(2) + "\n";
}

std::string check_results_text(const std::vector<CheckResult>& results) {
  std::ostringstream out;
  for (const auto& r : results) {
    out << r.name << ": " << to_string(r.status);
    if (!r.detail.empty()) out << " (" << r.detail << ")";
    out << "\n";
  }
  return out.str();
}

std::string check_results_json(const std::vector<CheckResult>& results) {
  Json arr = Json::array();
  for (const auto& r : results) {
    arr.push_back(Json{{"name", r.name},
                       {"status", to_string(r.status)},
                       {"detail", r.detail}});
  }
  return arr.dump(2) + "\n";
}

}  // namespace leib
