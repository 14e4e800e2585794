#include "gridhom/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <fstream>
#include <initializer_list>
#include <iomanip>
#include <functional>
#include <limits>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "gridhom/abacus.hpp"
#include "gridhom/antichain.hpp"
#include "gridhom/auslander.hpp"
#include "gridhom/complex.hpp"
#include "gridhom/homalg.hpp"
#include "gridhom/k0serre.hpp"
#include "gridhom/lattice.hpp"
#include "gridhom/quiver.hpp"
#include "gridhom/rational.hpp"
#include "gridhom/ycat.hpp"

namespace gridhom {
namespace {

using Json = nlohmann::ordered_json;

constexpr const char* kSchema = "fcy/1";

// Options shared by the subcommands; each subcommand owns one instance so
// defaults can differ.
struct Opts {
  int m = 1;
  int n = 0;
  std::string alpha;
  std::string variant;
  std::string format = "text";
  std::string out_path;
  std::uint64_t cap = 1000000;
  int jobs = 1;
  bool corrupt = false;
};

// ---------------------------------------------------------------------
// small output helpers

std::string csv_quote(const std::string& cell) {
  std::string out = "\"";
  for (char c : cell) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

Json json_rat(const Rat& r) {
  Int num = numerator(r), den = denominator(r);
  if (den == 1 && num >= std::numeric_limits<std::int64_t>::min() &&
      num <= std::numeric_limits<std::int64_t>::max())
    return Json(num.convert_to<std::int64_t>());
  return Json(rat_to_string(r));
}

// Renders a summand tag (a subset bitmask) as "{1,3}" over 1-based member
// positions; degree-0 summands carry the empty mask.
std::string tag_to_string(unsigned mask) {
  std::string s = "{";
  bool first = true;
  for (int i = 0; mask >> i; ++i)
    if (mask >> i & 1) {
      if (!first) s += ',';
      s += std::to_string(i + 1);
      first = false;
    }
  return s + "}";
}

bool format_allowed(const Opts& o, std::initializer_list<const char*> allowed,
                    std::ostream& err, const char* cmd) {
  for (const char* f : allowed)
    if (o.format == f) return true;
  err << cmd << ": unsupported format '" << o.format << "'\n";
  return false;
}

// Runs `body` against stdout or the --out file.
int with_sink(const Opts& o, std::ostream& out, std::ostream& err,
              const std::function<int(std::ostream&)>& body) {
  if (o.out_path.empty()) return body(out);
  std::ofstream f(o.out_path);
  if (!f) {
    err << "cannot open output file: " << o.out_path << "\n";
    return 2;
  }
  return body(f);
}

// Builds the lattice after checking the size cap, so a typo in --m/--n
// fails fast instead of allocating.
std::optional<GridLattice> make_lattice(const Opts& o, std::ostream& err) {
  Int size = grid_lattice_cardinality(o.m, o.n);
  if (size > Int(o.cap)) {
    err << "J_{" << o.m << "," << o.n << "} has " << size
        << " elements, above the cap of " << o.cap << "\n";
    return std::nullopt;
  }
  return GridLattice(o.m, o.n, o.cap);
}

std::optional<Partition> parse_alpha(const Opts& o, std::ostream& err) {
  try {
    Partition p = parse_partition(o.alpha);
    if (!is_valid_partition(p, o.m, o.n)) {
      err << "--alpha " << o.alpha << " is not a point of J_{" << o.m << ","
          << o.n << "}\n";
      return std::nullopt;
    }
    return p;
  } catch (const std::exception& e) {
    err << "cannot parse --alpha: " << e.what() << "\n";
    return std::nullopt;
  }
}

// ---------------------------------------------------------------------
// quiver presentation emitters (shared by `presentation` and `auslander`)

std::string label_to_string(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s;
}

Json presentation_json(const QuiverPresentation& Q) {
  Json j;
  j["orientation"] = Q.orientation == Orientation::Opposite ? "op" : "alg";
  j["vertices"] = Json::array();
  for (const auto& v : Q.vertices) j["vertices"].push_back(Json(v));
  j["arrows"] = Json::array();
  for (std::size_t i = 0; i < Q.arrows.size(); ++i) {
    Json a;
    a["id"] = "a" + std::to_string(i);
    a["src"] = Q.arrows[i].src;
    a["tgt"] = Q.arrows[i].tgt;
    a["move"] = Q.arrows[i].move;
    j["arrows"].push_back(std::move(a));
  }
  j["relations"] = Json::array();
  for (const auto& rel : Q.relations) {
    Json r = Json::array();
    for (const PathTerm& t : rel) {
      Json term;
      term["coeff"] = rat_to_string(t.coeff);
      term["path"] = Json::array({"a" + std::to_string(t.first),
                                  "a" + std::to_string(t.second)});
      r.push_back(std::move(term));
    }
    j["relations"].push_back(std::move(r));
  }
  return j;
}

void presentation_text(std::ostream& os, const QuiverPresentation& Q) {
  os << "orientation: "
     << (Q.orientation == Orientation::Opposite ? "op" : "alg") << "\n";
  for (std::size_t i = 0; i < Q.vertices.size(); ++i)
    os << "vertex v" << i << ": " << label_to_string(Q.vertices[i]) << "\n";
  for (std::size_t i = 0; i < Q.arrows.size(); ++i)
    os << "arrow a" << i << ": v" << Q.arrows[i].src << " -> v"
       << Q.arrows[i].tgt << " (move " << Q.arrows[i].move << ")\n";
  for (std::size_t i = 0; i < Q.relations.size(); ++i) {
    os << "relation " << i << ":";
    for (std::size_t t = 0; t < Q.relations[i].size(); ++t) {
      const PathTerm& term = Q.relations[i][t];
      os << (t ? " + " : " ") << rat_to_string(term.coeff) << "*(a"
         << term.first << " then a" << term.second << ")";
    }
    os << "\n";
  }
}

void presentation_dot(std::ostream& os, const QuiverPresentation& Q) {
  os << "digraph presentation {\n  rankdir=LR;\n";
  for (std::size_t i = 0; i < Q.vertices.size(); ++i)
    os << "  v" << i << " [label=\"" << label_to_string(Q.vertices[i])
       << "\"];\n";
  for (std::size_t i = 0; i < Q.arrows.size(); ++i)
    os << "  v" << Q.arrows[i].src << " -> v" << Q.arrows[i].tgt
       << " [label=\"a" << i << "\"];\n";
  os << "}\n";
}

int emit_presentation(const Opts& o, const QuiverPresentation& Q,
                      std::ostream& out, std::ostream& err,
                      const std::function<void(Json&)>& decorate) {
  return with_sink(o, out, err, [&](std::ostream& os) {
    if (o.format == "json") {
      Json j;
      j["schema"] = kSchema;
      decorate(j);
      Json p = presentation_json(Q);
      for (auto& [k, v] : p.items()) j[k] = v;
      os << j.dump(2) << "\n";
    } else if (o.format == "dot") {
      presentation_dot(os, Q);
    } else {
      presentation_text(os, Q);
    }
    return 0;
  });
}

// ---------------------------------------------------------------------
// hom-table core, shared by `hom` and verify item 3: for every requested
// pair the closed formula, the subset-lattice prediction, and the exact
// derived-category oracle must tell the same story.

struct HomRow {
  std::size_t a = 0, b = 0;
  std::optional<HomDegree> hd;
  bool agree = true;
};

std::vector<HomRow> hom_table(const GridLattice& L,
                              std::optional<std::size_t> only_source) {
  std::vector<HomRow> rows;
  for (std::size_t a = 0; a < L.size(); ++a) {
    if (only_source && a != *only_source) continue;
    Antichain C = decrement_antichain(L, a);
    ModuleComplex R = build_resolution(L, C);
    for (std::size_t b = 0; b < L.size(); ++b) {
      HomRow row;
      row.a = a;
      row.b = b;
      row.hd = hom_degree(L, L.at(a), L.at(b));
      Interval I{support_floor(L.at(b), L.n()), L.at(b)};
      auto H = derived_hom(L, R, I, 0, static_cast<int>(C.size()));
      auto pred = predicted_hom(L, C, I);
      if (row.hd) {
        row.agree = H.size() == 1 && H.count(row.hd->degree) == 1 &&
                    H.begin()->second == 1 && pred.has_value() &&
                    pred->degree == row.hd->degree;
      } else {
        row.agree = H.empty() && !pred.has_value();
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

// ---------------------------------------------------------------------
// subcommands

int cmd_lattice(const Opts& o, std::ostream& out, std::ostream& err) {
  if (!format_allowed(o, {"text", "json", "dot", "csv"}, err, "lattice"))
    return 2;
  auto L = make_lattice(o, err);
  if (!L) return 2;
  return with_sink(o, out, err, [&](std::ostream& os) {
    if (o.format == "json") {
      Json j;
      j["schema"] = kSchema;
      j["m"] = o.m;
      j["n"] = o.n;
      j["elements"] = Json::array();
      for (const Partition& p : L->elements()) j["elements"].push_back(Json(p.v));
      os << j.dump(2) << "\n";
    } else if (o.format == "dot") {
      os << "digraph lattice {\n  rankdir=BT;\n";
      for (const Partition& p : L->elements())
        os << "  \"" << p.to_string() << "\";\n";
      for (auto [lo, hi] : L->covers())
        os << "  \"" << L->at(lo).to_string() << "\" -> \""
           << L->at(hi).to_string() << "\";\n";
      os << "}\n";
    } else if (o.format == "csv") {
      os << "index,partition\n";
      for (std::size_t i = 0; i < L->size(); ++i)
        os << i << "," << csv_quote(L->at(i).to_string()) << "\n";
    } else {
      os << "J_{" << o.m << "," << o.n << "}: " << L->size() << " elements, "
         << L->covers().size() << " covers\n";
      for (std::size_t i = 0; i < L->size(); ++i)
        os << i << ": (" << L->at(i).to_string() << ")\n";
    }
    return 0;
  });
}

int cmd_antichain(const Opts& o, std::ostream& out, std::ostream& err) {
  if (!format_allowed(o, {"text", "json", "csv"}, err, "antichain")) return 2;
  auto L = make_lattice(o, err);
  if (!L) return 2;
  std::vector<std::size_t> tops;
  if (!o.alpha.empty()) {
    auto p = parse_alpha(o, err);
    if (!p) return 2;
    tops.push_back(L->index(*p));
  } else {
    for (std::size_t t = 0; t < L->size(); ++t) tops.push_back(t);
  }
  std::vector<Antichain> rows;
  for (std::size_t t : tops) {
    if (o.variant == "canonical") {
      rows.push_back(decrement_antichain(*L, t));
    } else {
      for (Antichain& C : enumerate_antichains(*L, t)) rows.push_back(std::move(C));
    }
  }
  return with_sink(o, out, err, [&](std::ostream& os) {
    auto members_string = [&](const Antichain& C) {
      std::string s;
      for (std::size_t i = 0; i < C.members.size(); ++i) {
        if (i) s += ';';
        s += L->at(C.members[i]).to_string();
      }
      return s;
    };
    if (o.format == "json") {
      Json j;
      j["schema"] = kSchema;
      j["m"] = o.m;
      j["n"] = o.n;
      j["antichains"] = Json::array();
      for (const Antichain& C : rows) {
        PropertyFlags F = classify(*L, C);
        Json r;
        r["top"] = Json(L->at(C.top).v);
        r["members"] = Json::array();
        for (std::size_t x : C.members) r["members"].push_back(Json(L->at(x).v));
        r["strong"] = F.strong;
        r["inclusive"] = F.inclusive;
        r["intersective"] = F.intersective;
        r["boolean"] = F.boolean_;
        j["antichains"].push_back(std::move(r));
      }
      os << j.dump(2) << "\n";
    } else if (o.format == "csv") {
      os << "top,members,strong,inclusive,intersective,boolean\n";
      for (const Antichain& C : rows) {
        PropertyFlags F = classify(*L, C);
        os << csv_quote(L->at(C.top).to_string()) << ","
           << csv_quote(members_string(C)) << "," << F.strong << ","
           << F.inclusive << "," << F.intersective << "," << F.boolean_ << "\n";
      }
    } else {
      for (const Antichain& C : rows) {
        PropertyFlags F = classify(*L, C);
        os << "top (" << L->at(C.top).to_string() << ") members ["
           << members_string(C) << "] strong=" << F.strong
           << " inclusive=" << F.inclusive
           << " intersective=" << F.intersective << " boolean=" << F.boolean_
           << "\n";
      }
    }
    return 0;
  });
}

int cmd_resolve(const Opts& o, std::ostream& out, std::ostream& err) {
  if (!format_allowed(o, {"text", "json"}, err, "resolve")) return 2;
  auto L = make_lattice(o, err);
  if (!L) return 2;
  auto p = parse_alpha(o, err);
  if (!p) return 2;
  std::size_t a = L->index(*p);
  Antichain C = decrement_antichain(*L, a);
  ModuleComplex R = build_resolution(*L, C);
  return with_sink(o, out, err, [&](std::ostream& os) {
    if (o.format == "json") {
      Json j;
      j["schema"] = kSchema;
      j["m"] = o.m;
      j["n"] = o.n;
      j["alpha"] = Json(p->v);
      j["degrees"] = Json::array();
      for (int d = R.lo; d <= R.hi(); ++d) {
        Json layer = Json::array();
        for (const Summand& s : R.term(d)) layer.push_back(Json(L->at(s.label).v));
        j["degrees"].push_back(std::move(layer));
      }
      j["boundaries"] = Json::array();
      for (int d = R.lo + 1; d <= R.hi(); ++d) {
        Json entries = Json::array();
        QMat B = R.boundary_from(d);
        for (std::size_t r = 0; r < B.rows(); ++r)
          for (std::size_t c = 0; c < B.cols(); ++c)
            if (B.at(r, c) != 0)
              entries.push_back(Json::array({Json(r), Json(c), json_rat(B.at(r, c))}));
        j["boundaries"].push_back(std::move(entries));
      }
      os << j.dump(2) << "\n";
    } else {
      os << "resolution of (" << p->to_string() << ") in J_{" << o.m << ","
         << o.n << "}\n";
      for (int d = R.lo; d <= R.hi(); ++d) {
        os << "degree " << d << ":";
        for (const Summand& s : R.term(d))
          os << " (" << L->at(s.label).to_string() << ")" << tag_to_string(s.tag);
        os << "\n";
      }
      for (int d = R.lo + 1; d <= R.hi(); ++d) {
        QMat B = R.boundary_from(d);
        os << "d" << d << ":";
        bool any = false;
        for (std::size_t c = 0; c < B.cols(); ++c)
          for (std::size_t r = 0; r < B.rows(); ++r)
            if (B.at(r, c) != 0) {
              os << " " << tag_to_string(R.term(d)[c].tag) << "->"
                 << tag_to_string(R.term(d - 1)[r].tag) << ":"
                 << rat_to_string(B.at(r, c));
              any = true;
            }
        if (!any) os << " 0";
        os << "\n";
      }
    }
    return 0;
  });
}

int cmd_hom(const Opts& o, std::ostream& out, std::ostream& err) {
  if (!format_allowed(o, {"text", "json", "csv"}, err, "hom")) return 2;
  auto L = make_lattice(o, err);
  if (!L) return 2;
  std::optional<std::size_t> source;
  if (!o.alpha.empty()) {
    auto p = parse_alpha(o, err);
    if (!p) return 2;
    source = L->index(*p);
  }
  std::vector<HomRow> rows = hom_table(*L, source);
  bool consistent = true;
  for (const HomRow& r : rows)
    if (!r.agree) {
      consistent = false;
      err << "oracle mismatch at (" << L->at(r.a).to_string() << ") -> ("
          << L->at(r.b).to_string() << ")\n";
    }
  int code = with_sink(o, out, err, [&](std::ostream& os) {
    auto blocks_string = [](const HomDegree& hd) {
      std::string s;
      for (int k : hd.blocks) {
        if (!s.empty()) s += ';';
        s += std::to_string(k);
      }
      return s;
    };
    if (o.format == "json") {
      Json j;
      j["schema"] = kSchema;
      j["m"] = o.m;
      j["n"] = o.n;
      j["rows"] = Json::array();
      for (const HomRow& r : rows) {
        Json row;
        row["alpha"] = Json(L->at(r.a).v);
        row["beta"] = Json(L->at(r.b).v);
        if (r.hd) {
          row["degree"] = r.hd->degree;
          row["blocks"] = Json(std::vector<int>(r.hd->blocks.begin(), r.hd->blocks.end()));
        } else {
          row["degree"] = nullptr;
        }
        j["rows"].push_back(std::move(row));
      }
      j["oracle_consistent"] = consistent;
      os << j.dump(2) << "\n";
    } else if (o.format == "csv") {
      os << "alpha,beta,degree,blocks\n";
      for (const HomRow& r : rows) {
        os << csv_quote(L->at(r.a).to_string()) << ","
           << csv_quote(L->at(r.b).to_string()) << ",";
        if (r.hd)
          os << r.hd->degree << "," << csv_quote(blocks_string(*r.hd));
        else
          os << ",";
        os << "\n";
      }
    } else {
      for (const HomRow& r : rows) {
        os << "(" << L->at(r.a).to_string() << ") -> ("
           << L->at(r.b).to_string() << "): ";
        if (r.hd)
          os << "degree " << r.hd->degree << " blocks {" << blocks_string(*r.hd)
             << "}";
        else
          os << "zero";
        if (!r.agree) os << "  ORACLE MISMATCH";
        os << "\n";
      }
    }
    return 0;
  });
  if (code != 0) return code;
  return consistent ? 0 : 1;
}

int cmd_orbit(const Opts& o, std::ostream& out, std::ostream& err) {
  if (!format_allowed(o, {"text", "json", "csv"}, err, "orbit")) return 2;
  auto p = parse_alpha(o, err);
  if (!p) return 2;
  CompactPartition cp = from_partition(*p, o.n, Side::Right);
  Configuration start = right_config(cp);
  auto trace = orbit_trace(cp);
  bool closes = !trace.empty() && trace.back().first == start;
  int total = 0;
  for (const auto& [cfg, cnt] : trace) total += cnt;
  bool ok = closes && total == o.m * o.n &&
            static_cast<int>(trace.size()) == o.m + o.n + 1;
  int code = with_sink(o, out, err, [&](std::ostream& os) {
    if (o.format == "json") {
      Json j;
      j["schema"] = kSchema;
      j["m"] = o.m;
      j["n"] = o.n;
      j["alpha"] = Json(p->v);
      j["steps"] = Json::array();
      for (const auto& [cfg, cnt] : trace) {
        Json s;
        s["beads"] = Json(cfg.beads);
        s["support"] = cnt;
        j["steps"].push_back(std::move(s));
      }
      j["total"] = total;
      j["closes"] = closes;
      os << j.dump(2) << "\n";
    } else if (o.format == "csv") {
      os << "step,beads,support\n";
      for (std::size_t i = 0; i < trace.size(); ++i)
        os << i + 1 << "," << csv_quote(trace[i].first.to_string()) << ","
           << trace[i].second << "\n";
    } else {
      os << "orbit of (" << p->to_string() << ") in J_{" << o.m << "," << o.n
         << "}, period " << o.m + o.n + 1 << "\n";
      os << "start " << start.to_string() << "\n" << abacus_art(start);
      for (std::size_t i = 0; i < trace.size(); ++i) {
        os << "step " << i + 1 << ": " << trace[i].first.to_string()
           << "  support " << trace[i].second << "\n"
           << abacus_art(trace[i].first);
      }
      os << "total support " << total << (total == o.m * o.n ? " == " : " != ")
         << o.m << "*" << o.n << "; trace "
         << (closes ? "closes" : "DOES NOT close") << "\n";
    }
    return 0;
  });
  if (code != 0) return code;
  return ok ? 0 : 1;
}

int cmd_coxeter(const Opts& o, std::ostream& out, std::ostream& err) {
  if (!format_allowed(o, {"text", "json"}, err, "coxeter")) return 2;
  auto L = make_lattice(o, err);
  if (!L) return 2;
  ZMat M = serre_k0_matrix(*L).M;
  int exponent = o.m + o.n + 1;
  int sign = (o.m * o.n) % 2 ? -1 : 1;
  int expected = o.corrupt ? -sign : sign;
  ZMat power = M.power(static_cast<unsigned>(exponent));
  ZMat want = ZMat::identity(L->size()).scaled(expected);
  bool holds = power == want;
  std::optional<std::pair<std::size_t, std::size_t>> first_failure;
  if (!holds) {
    for (std::size_t i = 0; i < power.rows() && !first_failure; ++i)
      for (std::size_t j = 0; j < power.cols(); ++j)
        if (power.at(i, j) != want.at(i, j)) {
          first_failure = {i, j};
          break;
        }
  }
  if (!o.corrupt) {
    // independent route through the batch checker must agree
    CoxeterOrderReport rep = coxeter_order_check(o.m, o.n);
    if (rep.holds != holds)
      throw std::logic_error("coxeter check disagrees with its batch form");
  }
  int code = with_sink(o, out, err, [&](std::ostream& os) {
    if (o.format == "json") {
      Json j;
      j["schema"] = kSchema;
      j["m"] = o.m;
      j["n"] = o.n;
      j["exponent"] = exponent;
      j["sign"] = expected;
      j["holds"] = holds;
      if (first_failure)
        j["first_failure"] = Json::array({Json(first_failure->first), Json(first_failure->second)});
      os << j.dump(2) << "\n";
    } else {
      os << "K0 Serre matrix of J_{" << o.m << "," << o.n << "}: M^" << exponent
         << (holds ? " == " : " != ") << (expected == 1 ? "Id" : "-Id");
      if (first_failure)
        os << " (first failure at (" << first_failure->first << ","
           << first_failure->second << "))";
      os << "\n";
    }
    return 0;
  });
  if (code != 0) return code;
  return holds ? 0 : 1;
}

int cmd_presentation(const Opts& o, std::ostream& out, std::ostream& err) {
  if (!format_allowed(o, {"text", "json", "dot"}, err, "presentation")) return 2;
  auto L = make_lattice(o, err);
  if (!L) return 2;
  SignConvention conv = o.variant == "v"   ? SignConvention::Commuting
                        : o.variant == "w" ? SignConvention::Anticommuting
                                           : SignConvention::Raw;
  QuiverPresentation Q = bead_presentation(*L, conv);
  return emit_presentation(o, Q, out, err, [&](Json& j) {
    j["m"] = o.m;
    j["n"] = o.n;
    j["variant"] = o.variant;
  });
}

int cmd_auslander(const Opts& o, std::ostream& out, std::ostream& err) {
  // here --m and --n carry the type parameters: A_s^d with s = m, d = n
  int s = o.m, d = o.n;
  Int nverts = grid_lattice_cardinality(d + 1, s - 1);  // binom(s+d, d+1)
  if (nverts > Int(o.cap)) {
    err << "A_" << s << "^" << d << " has " << nverts
        << " vertices, above the cap of " << o.cap << "\n";
    return 2;
  }
  if (o.variant == "check") {
    if (!format_allowed(o, {"text", "json"}, err, "auslander")) return 2;
    if (s < 2) {
      err << "the dual comparison needs s >= 2\n";
      return 2;
    }
    bool iso = complementary_dual_isomorphic(s, d);
    int code = with_sink(o, out, err, [&](std::ostream& os) {
      if (o.format == "json") {
        Json j;
        j["schema"] = kSchema;
        j["s"] = s;
        j["d"] = d;
        j["isomorphic"] = iso;
        os << j.dump(2) << "\n";
      } else {
        os << "A_" << s << "^" << d
           << (iso ? " matches " : " DOES NOT match ")
           << "the rescaled quadratic dual of A_" << d + 2 << "^" << s - 2
           << "\n";
      }
      return 0;
    });
    if (code != 0) return code;
    return iso ? 0 : 1;
  }
  if (!format_allowed(o, {"text", "json", "dot"}, err, "auslander")) return 2;
  QuiverPresentation Q;
  try {
    Q = higher_auslander(s, d);
  } catch (const std::invalid_argument& e) {
    err << "auslander: " << e.what() << "\n";
    return 2;
  }
  if (o.variant == "dual") Q = quadratic_dual(Q);
  return emit_presentation(o, Q, out, err, [&](Json& j) {
    j["s"] = s;
    j["d"] = d;
    j["variant"] = o.variant;
  });
}

// ---------------------------------------------------------------------
// verify: one line per invariant family, exit 0 iff all hold

struct ItemResult {
  bool ok = false;
  std::string detail;
};

int cmd_verify(const Opts& o, std::ostream& out, std::ostream& err) {
  if (!format_allowed(o, {"text", "json"}, err, "verify")) return 2;
  auto lat = make_lattice(o, err);
  if (!lat) return 2;
  const GridLattice& L = *lat;
  const int m = o.m, n = o.n;

  auto config_of = [&](std::size_t i) {
    return right_config(from_partition(L.at(i), n, Side::Right));
  };

  using Body = std::function<ItemResult()>;
  std::vector<std::pair<std::string, Body>> items;

  items.emplace_back("cardinality", [&]() -> ItemResult {
    Int want = grid_lattice_cardinality(m, n);
    bool ok = Int(L.size()) == want;
    std::ostringstream d;
    d << L.size() << " elements, binomial says " << want;
    return {ok, d.str()};
  });

  items.emplace_back("antichain flags", [&]() -> ItemResult {
    std::size_t count = 0;
    for (std::size_t t = 0; t < L.size(); ++t)
      for (const Antichain& C : enumerate_antichains(L, t)) {
        PropertyFlags F = classify(L, C);
        bool witness = boolean_witness(L, C).has_value();
        bool top_singleton = C.size() == 1 && C.members[0] == t;
        if (F.inclusive != F.strong)
          return {false, "inclusive and strong disagree at top " +
                             L.at(t).to_string()};
        if (F.intersective && !top_singleton && !F.strong)
          return {false, "intersective without strong at top " +
                             L.at(t).to_string()};
        if (F.boolean_ != witness)
          return {false, "boolean flag and witness table disagree at top " +
                             L.at(t).to_string()};
        ++count;
      }
    return {true, std::to_string(count) + " antichains classified"};
  });

  items.emplace_back("hom table oracle", [&]() -> ItemResult {
    auto rows = hom_table(L, std::nullopt);
    std::size_t nonzero = 0;
    for (const HomRow& r : rows) {
      if (!r.agree)
        return {false, "mismatch at (" + L.at(r.a).to_string() + ") -> (" +
                           L.at(r.b).to_string() + ")"};
      if (r.hd) ++nonzero;
    }
    std::ostringstream d;
    d << rows.size() << " pairs, " << nonzero << " nonzero, formula == "
      << "prediction == derived oracle";
    return {true, d.str()};
  });

  items.emplace_back("degree zero tests", [&]() -> ItemResult {
    for (std::size_t a = 0; a < L.size(); ++a)
      for (std::size_t b = 0; b < L.size(); ++b)
        if (!degree_zero_facts(L, L.at(a), L.at(b)).all_equal())
          return {false, "five-way split at (" + L.at(a).to_string() +
                             ") -> (" + L.at(b).to_string() + ")"};
    return {true, std::to_string(L.size() * L.size()) +
                      " pairs, all five tests agree"};
  });

  items.emplace_back("orbit closure", [&]() -> ItemResult {
    for (std::size_t a = 0; a < L.size(); ++a) {
      CompactPartition p = from_partition(L.at(a), n, Side::Right);
      auto trace = orbit_trace(p);
      int total = 0;
      for (const auto& [cfg, cnt] : trace) total += cnt;
      if (static_cast<int>(trace.size()) != m + n + 1 ||
          trace.back().first != right_config(p) || total != m * n)
        return {false, "orbit defect at (" + L.at(a).to_string() + ")"};
    }
    std::ostringstream d;
    d << L.size() << " orbits of period " << m + n + 1 << ", each sweeping "
      << m * n << " cells";
    return {true, d.str()};
  });

  items.emplace_back("nakayama interval", [&]() -> ItemResult {
    for (std::size_t a = 0; a < L.size(); ++a) {
      CompactPartition p = from_partition(L.at(a), n, Side::Right);
      int deg = static_cast<int>(p.mutable_indices().size());
      ModuleComplex R = build_resolution(L, decrement_antichain(L, a));
      auto H = injective_homology(L, apply_nakayama(R));
      std::string at = " at (" + L.at(a).to_string() + ")";
      if (H.size() != 1 || H.count(deg) != 1)
        return {false, "homology not concentrated in the block count" + at};
      std::vector<std::size_t> support;
      for (auto& [x, dim] : H[deg]) {
        if (dim != 1) return {false, "homology value not a line" + at};
        support.push_back(x);
      }
      std::sort(support.begin(), support.end());
      auto want = L.interval_elements(
          Interval{serre_floor(p).values(), serre_step(p).values()});
      std::sort(want.begin(), want.end());
      if (support != want)
        return {false, "homology support misses the stepped interval" + at};
    }
    return {true, std::to_string(L.size()) +
                      " twisted resolutions land on the stepped intervals"};
  });

  items.emplace_back("k0 coxeter order", [&]() -> ItemResult {
    ZMat M = serre_k0_matrix(L).M;
    int exponent = m + n + 1;
    int sign = (m * n) % 2 ? -1 : 1;
    if (o.corrupt) sign = -sign;
    bool ok = M.power(static_cast<unsigned>(exponent)) ==
              ZMat::identity(L.size()).scaled(sign);
    if (!o.corrupt && coxeter_order_check(m, n).holds != ok)
      return {false, "direct power and batch checker disagree"};
    std::ostringstream d;
    d << "M^" << exponent << (ok ? " == " : " != ")
      << (sign == 1 ? "Id" : "-Id");
    return {ok, d.str()};
  });

  items.emplace_back("chain relations", [&]() -> ItemResult {
    std::size_t squares = 0, zeros = 0;
    for (std::size_t a = 0; a < L.size(); ++a) {
      Configuration R0 = config_of(a);
      std::vector<int> mv;
      for (int k : movable_beads(R0))
        if (k >= -m + 2) mv.push_back(k);
      std::string at = " at (" + L.at(a).to_string() + ")";
      for (std::size_t i = 0; i < mv.size(); ++i)
        for (std::size_t j = i + 1; j < mv.size(); ++j) {
          if (!square_relation_holds(L, a, mv[i], mv[j]))
            return {false, "square " + std::to_string(mv[i]) + "," +
                               std::to_string(mv[j]) + " fails" + at};
          ++squares;
        }
      for (int k : mv) {
        if (k - 1 < -m + 2 || R0.has(k - 2)) continue;
        if (!zero_relation_holds(L, a, k))
          return {false, "zero path " + std::to_string(k) + " fails" + at};
        ++zeros;
      }
    }
    std::ostringstream d;
    d << squares << " squares and " << zeros << " zero paths hold at the chain level";
    return {true, d.str()};
  });

  items.emplace_back("word straightening", [&]() -> ItemResult {
    auto moves_at = [&](std::size_t i) {
      std::vector<int> out;
      for (int k : movable_beads(config_of(i)))
        if (k >= -m + 2) out.push_back(k);
      return out;
    };
    auto moved = [&](std::size_t i, int k) {
      return L.index(read_right(move_bead(config_of(i), k)).values());
    };
    std::size_t words = 0;
    for (std::size_t a = 0; a < L.size(); ++a) {
      Configuration R0 = config_of(a);
      std::string at = " from (" + L.at(a).to_string() + ")";
      struct Word {
        std::size_t end;
        std::vector<int> moves;
      };
      std::vector<Word> frontier{{a, {}}};
      for (int depth = 0; depth < 3; ++depth) {
        std::vector<Word> next;
        for (const Word& w : frontier)
          for (int k : moves_at(w.end)) {
            Word grown = w;
            grown.moves.push_back(k);
            grown.end = moved(w.end, k);
            next.push_back(std::move(grown));
          }
        for (const Word& w : next) {
          ComposedWord cw = compose_word({R0, w.moves});
          bool missing = false;
          for (int k : w.moves)
            if (!R0.has(k)) missing = true;
          if ((cw.sign == 0) != missing)
            return {false, "sign-zero rule broken" + at};
          ResolutionMap lift = word_lift(L, a, w.moves);
          bool null = is_null_homotopic(L, lift.src_complex, lift.tgt_complex,
                                        lift.map);
          if ((cw.sign == 0) != null)
            return {false, "chain lift disagrees with the zero rule" + at};
          if (cw.sign != 0) {
            ResolutionMap canon = word_lift(L, a, cw.moves);
            ChainMap diff =
                add_chain_maps(lift.src_complex, lift.tgt_complex, lift.map,
                               scale_chain_map(canon.map, Rat(-cw.sign)));
            if (!is_null_homotopic(L, lift.src_complex, lift.tgt_complex, diff))
              return {false, "canonical replay misses the lift" + at};
          }
          ++words;
        }
        frontier = std::move(next);
      }
    }
    return {true, std::to_string(words) +
                      " words straightened against their chain lifts"};
  });

  items.emplace_back("tilting endomorphisms", [&]() -> ItemResult {
    if (n == 0) return {true, "skipped: no arrows in J_{m,0}"};
    auto S = tilting_summands(m, n);
    for (std::size_t i = 0; i < S.size(); ++i)
      for (std::size_t j = 0; j < S.size(); ++j) {
        auto hd = hom_degree(L, S[i].alpha, S[j].alpha);
        if (hd && hd->degree != S[i].shift - S[j].shift)
          return {false, "self-extension between (" + S[i].alpha.to_string() +
                             ") and (" + S[j].alpha.to_string() + ")"};
      }
    QuiverPresentation T = end_tilting_presentation(m, n);
    QuiverPresentation A = higher_auslander(m + 1, n - 1);
    std::vector<int> bij(T.vertices.size());
    for (std::size_t i = 0; i < T.vertices.size(); ++i) {
      bij[i] = A.vertex_id(complement_shift(Configuration{m, n, T.vertices[i]}));
      if (bij[i] < 0) return {false, "complement bijection misses a vertex"};
    }
    if (!presentations_isomorphic(T, A, bij))
      return {false, "endomorphism presentation differs from A_" +
                         std::to_string(m + 1) + "^" + std::to_string(n - 1)};
    QuiverPresentation W = bead_presentation(L, SignConvention::Anticommuting);
    QuiverPresentation D = quadratic_dual(higher_auslander(n + 1, m - 1));
    std::vector<int> sbij(W.vertices.size());
    for (std::size_t i = 0; i < W.vertices.size(); ++i) {
      std::vector<int> lbl = W.vertices[i];
      for (int& b : lbl) b += m;
      sbij[i] = D.vertex_id(lbl);
      if (sbij[i] < 0) return {false, "shift bijection misses a vertex"};
    }
    if (!presentations_isomorphic(W, D, sbij))
      return {false, "anticommuting variant differs from the dual of A_" +
                         std::to_string(n + 1) + "^" + std::to_string(m - 1)};
    std::ostringstream d;
    d << "no self-extensions; End = A_" << m + 1 << "^" << n - 1
      << "; anticommuting variant = dual of A_" << n + 1 << "^" << m - 1;
    return {true, d.str()};
  });

  items.emplace_back("quadratic duality", [&]() -> ItemResult {
    if (n == 0) return {true, "skipped: no arrows in J_{m,0}"};
    QuiverPresentation Q = higher_auslander(m + 1, n - 1);
    std::size_t paths = two_paths(Q).size();
    std::size_t r1 = relation_matrix(Q).rank();
    std::size_t r2 = relation_matrix(quadratic_dual(Q)).rank();
    if (r1 + r2 != paths) {
      std::ostringstream d;
      d << "rank defect: " << r1 << " + " << r2 << " != " << paths;
      return {false, d.str()};
    }
    if (!complementary_dual_isomorphic(m + 1, n - 1))
      return {false, "rescaled dual comparison fails"};
    std::ostringstream d;
    d << "relation ranks " << r1 << " + " << r2 << " fill the " << paths
      << " two-paths; rescaled dual matches";
    return {true, d.str()};
  });

  std::vector<ItemResult> results(items.size());
  auto guarded = [&](std::size_t i) {
    try {
      results[i] = items[i].second();
    } catch (const std::exception& e) {
      results[i] = {false, std::string("exception: ") + e.what()};
    }
  };
  if (o.jobs <= 1) {
    for (std::size_t i = 0; i < items.size(); ++i) guarded(i);
  } else {
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (std::size_t i; (i = next.fetch_add(1)) < items.size();) guarded(i);
    };
    std::vector<std::thread> pool;
    std::size_t width = std::min<std::size_t>(o.jobs, items.size());
    for (std::size_t t = 0; t < width; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  bool all_ok = true;
  for (const ItemResult& r : results) all_ok = all_ok && r.ok;
  int code = with_sink(o, out, err, [&](std::ostream& os) {
    if (o.format == "json") {
      Json j;
      j["schema"] = kSchema;
      j["m"] = m;
      j["n"] = n;
      j["items"] = Json::array();
      for (std::size_t i = 0; i < items.size(); ++i) {
        Json it;
        it["index"] = i + 1;
        it["name"] = items[i].first;
        it["ok"] = results[i].ok;
        it["detail"] = results[i].detail;
        j["items"].push_back(std::move(it));
      }
      j["all_ok"] = all_ok;
      os << j.dump(2) << "\n";
    } else {
      os << "verify J_{" << m << "," << n << "}\n";
      for (std::size_t i = 0; i < items.size(); ++i)
        os << (results[i].ok ? "ok  " : "FAIL") << " " << std::setw(2)
           << i + 1 << " " << items[i].first << ": " << results[i].detail
           << "\n";
      std::size_t passed = 0;
      for (const ItemResult& r : results) passed += r.ok;
      os << passed << "/" << items.size() << " checks passed\n";
    }
    return 0;
  });
  if (code != 0) return code;
  return all_ok ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"exact invariants of grid order-ideal lattices"};
  app.name("gridhom");
  app.require_subcommand(1);

  int status = 0;
  auto add_common = [&](CLI::App* sc, Opts& o) {
    sc->add_option("--m", o.m, "rows of the grid")
        ->required()
        ->check(CLI::PositiveNumber);
    sc->add_option("--n", o.n, "columns of the grid")
        ->required()
        ->check(CLI::NonNegativeNumber);
    sc->add_option("--format", o.format, "output format (default text)");
    sc->add_option("--out", o.out_path, "write the payload to this file");
    sc->add_option("--cap", o.cap, "largest lattice size to build");
  };

  Opts lattice_o;
  auto* lattice_sc = app.add_subcommand("lattice", "enumerate the lattice");
  add_common(lattice_sc, lattice_o);
  lattice_sc->callback([&] { status = cmd_lattice(lattice_o, out, err); });

  Opts antichain_o;
  antichain_o.variant = "all";
  auto* antichain_sc =
      app.add_subcommand("antichain", "classify antichains below a top");
  add_common(antichain_sc, antichain_o);
  antichain_sc->add_option("--alpha", antichain_o.alpha,
                           "restrict to this top (comma separated)");
  antichain_sc
      ->add_option("--variant", antichain_o.variant,
                   "all antichains or only the canonical one per top")
      ->check(CLI::IsMember({"all", "canonical"}));
  antichain_sc->callback([&] { status = cmd_antichain(antichain_o, out, err); });

  Opts resolve_o;
  auto* resolve_sc =
      app.add_subcommand("resolve", "canonical resolution of one element");
  add_common(resolve_sc, resolve_o);
  resolve_sc->add_option("--alpha", resolve_o.alpha, "the element to resolve")
      ->required();
  resolve_sc->callback([&] { status = cmd_resolve(resolve_o, out, err); });

  Opts hom_o;
  auto* hom_sc = app.add_subcommand(
      "hom", "hom-degree table with the exact derived oracle");
  add_common(hom_sc, hom_o);
  hom_sc->add_option("--alpha", hom_o.alpha, "restrict the source element");
  hom_sc->callback([&] { status = cmd_hom(hom_o, out, err); });

  Opts orbit_o;
  auto* orbit_sc =
      app.add_subcommand("orbit", "Serre orbit trace of one element");
  add_common(orbit_sc, orbit_o);
  orbit_sc->add_option("--alpha", orbit_o.alpha, "the starting element")
      ->required();
  orbit_sc->callback([&] { status = cmd_orbit(orbit_o, out, err); });

  Opts coxeter_o;
  auto* coxeter_sc =
      app.add_subcommand("coxeter", "K0 order of the Serre matrix");
  add_common(coxeter_sc, coxeter_o);
  coxeter_sc->add_flag("--corrupt-sign", coxeter_o.corrupt,
                       "fault injection: demand the wrong sign");
  coxeter_sc->callback([&] { status = cmd_coxeter(coxeter_o, out, err); });

  Opts presentation_o;
  presentation_o.variant = "u";
  auto* presentation_sc = app.add_subcommand(
      "presentation", "bead-move quiver presentation of the lattice algebra");
  add_common(presentation_sc, presentation_o);
  presentation_sc
      ->add_option("--variant", presentation_o.variant,
                   "generator scaling: u raw, v commuting, w anticommuting")
      ->check(CLI::IsMember({"u", "v", "w"}));
  presentation_sc->callback(
      [&] { status = cmd_presentation(presentation_o, out, err); });

  Opts auslander_o;
  auslander_o.variant = "algebra";
  auto* auslander_sc = app.add_subcommand(
      "auslander", "higher Auslander presentation A_s^d (--m is s, --n is d)");
  add_common(auslander_sc, auslander_o);
  auslander_sc
      ->add_option("--variant", auslander_o.variant,
                   "algebra, its quadratic dual, or the duality check")
      ->check(CLI::IsMember({"algebra", "dual", "check"}));
  auslander_sc->callback([&] { status = cmd_auslander(auslander_o, out, err); });

  Opts verify_o;
  auto* verify_sc =
      app.add_subcommand("verify", "run every invariant family on one lattice");
  add_common(verify_sc, verify_o);
  verify_sc->add_option("--jobs", verify_o.jobs, "parallel workers")
      ->check(CLI::Range(1, 64));
  verify_sc->add_flag("--corrupt-sign", verify_o.corrupt,
                      "fault injection: flip the expected K0 sign");
  verify_sc->callback([&] { status = cmd_verify(verify_o, out, err); });

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  return status;
}

}  // namespace gridhom
