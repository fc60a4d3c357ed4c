#include "gfcech/session.hpp"

#include <cctype>
#include <cstdint>
#include <map>
#include <set>
#include <sstream>
#include <utility>

namespace gfcech {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string t;
  while (in >> t) out.push_back(t);
  return out;
}

std::vector<std::string> split_on(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

bool is_name(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return true;
}

int parse_int(const std::string& s, int line, const std::string& what) {
  try {
    std::size_t used = 0;
    int v = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ParseError(line, what + " expects an integer, got: " + s);
  }
}

std::uint64_t parse_u64(const std::string& s, int line, const std::string& what) {
  try {
    std::size_t used = 0;
    std::uint64_t v = std::stoull(s, &used);
    if (used != s.size() || s[0] == '-') throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ParseError(line, what + " expects a nonnegative integer, got: " + s);
  }
}

void require_homogeneous(const Ring& ring, const Polynomial& p, int line, const std::string& what) {
  if (p.is_homogeneous()) return;
  const auto& ts = p.terms();
  int d0 = weighted_degree(ts[0].mono, ring.weights());
  for (const auto& t : ts) {
    int dt = weighted_degree(t.mono, ring.weights());
    if (dt != d0)
      throw ParseError(line, what + " is not homogeneous: term " +
                                 monomial_to_string(ts[0].mono, ring.vars()) + " has degree " +
                                 std::to_string(d0) + ", term " +
                                 monomial_to_string(t.mono, ring.vars()) + " has degree " +
                                 std::to_string(dt));
  }
}

std::vector<Polynomial> parse_poly_list(const Ring& ring, const std::string& s, int line,
                                        const std::string& what) {
  std::vector<Polynomial> out;
  for (const std::string& part : split_on(s, ',')) {
    Polynomial p = parse_polynomial(ring, part, line);
    require_homogeneous(ring, p, line, what);
    out.push_back(std::move(p));
  }
  return out;
}

/* [[a, b], [c, d]] or [] -> rows of entry strings; pos ends past the block. */
std::vector<std::vector<std::string>> parse_matrix_block(const std::string& s, std::size_t& pos,
                                                         int line) {
  while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  if (pos >= s.size() || s[pos] != '[') throw ParseError(line, "expected a [...] block");
  std::size_t open = pos;
  int depth = 0;
  std::size_t close = std::string::npos;
  for (std::size_t i = pos; i < s.size(); ++i) {
    if (s[i] == '[') ++depth;
    if (s[i] == ']' && --depth == 0) {
      close = i;
      break;
    }
  }
  if (close == std::string::npos) throw ParseError(line, "unbalanced brackets");
  pos = close + 1;
  std::string inner = trim(s.substr(open + 1, close - open - 1));
  std::vector<std::vector<std::string>> rows;
  if (inner.empty()) return rows;
  std::size_t i = 0;
  while (i < inner.size()) {
    while (i < inner.size() &&
           (std::isspace(static_cast<unsigned char>(inner[i])) || inner[i] == ','))
      ++i;
    if (i >= inner.size()) break;
    if (inner[i] != '[') throw ParseError(line, "expected a [...] row");
    int d = 0;
    std::size_t j = i;
    for (; j < inner.size(); ++j) {
      if (inner[j] == '[') ++d;
      if (inner[j] == ']' && --d == 0) break;
    }
    if (j >= inner.size()) throw ParseError(line, "unbalanced brackets");
    std::string row = trim(inner.substr(i + 1, j - i - 1));
    std::vector<std::string> entries;
    if (!row.empty())
      for (const std::string& e : split_on(row, ',')) entries.push_back(trim(e));
    rows.push_back(std::move(entries));
    i = j + 1;
  }
  return rows;
}

const std::set<std::string>& task_keys(TaskKind k) {
  static const std::set<std::string> common{"window", "levels", "margin"};
  static const std::set<std::string> with_ideal{"window", "levels", "margin", "ideal"};
  static const std::set<std::string> synth{"window", "levels", "margin", "seed", "trials"};
  static const std::set<std::string> tor{"window", "levels", "margin", "koszul", "auto", "imax"};
  switch (k) {
    case TaskKind::compare:
    case TaskKind::filtreg:
      return with_ideal;
    case TaskKind::synth:
      return synth;
    case TaskKind::tor:
      return tor;
    default:
      return common;
  }
}

int positional_count(TaskKind k) { return k == TaskKind::ses ? 3 : 2; }

}  // namespace

std::string task_kind_name(TaskKind k) {
  switch (k) {
    case TaskKind::localcohomology:
      return "localcohomology";
    case TaskKind::genfrac:
      return "genfrac";
    case TaskKind::compare:
      return "compare";
    case TaskKind::filtreg:
      return "filtreg";
    case TaskKind::synth:
      return "synth";
    case TaskKind::ses:
      return "ses";
    case TaskKind::tor:
      return "tor";
  }
  return "?";
}

const NamedPolys* SessionSpec::find_ideal(const std::string& name) const {
  for (const auto& d : ideals)
    if (d.name == name) return &d;
  return nullptr;
}
const NamedPolys* SessionSpec::find_seq(const std::string& name) const {
  for (const auto& d : seqs)
    if (d.name == name) return &d;
  return nullptr;
}
const NamedModule* SessionSpec::find_module(const std::string& name) const {
  for (const auto& d : modules)
    if (d.name == name) return &d;
  return nullptr;
}
const NamedMap* SessionSpec::find_map(const std::string& name) const {
  for (const auto& d : maps)
    if (d.name == name) return &d;
  return nullptr;
}

Polynomial parse_polynomial(const Ring& ring, const std::string& text, int line) {
  std::string s = trim(text);
  if (s.empty()) throw ParseError(line, "empty polynomial");
  const Field& field = ring.field();
  Polynomial acc = ring.zero();
  std::size_t i = 0;
  while (i < s.size()) {
    int sign = 1;
    while (i < s.size() && (std::isspace(static_cast<unsigned char>(s[i])) || s[i] == '+' ||
                            s[i] == '-')) {
      if (s[i] == '-') sign = -sign;
      ++i;
    }
    if (i >= s.size()) throw ParseError(line, "dangling sign in polynomial: " + s);
    std::size_t start = i;
    while (i < s.size() && s[i] != '+' && s[i] != '-') ++i;
    std::string term = trim(s.substr(start, i - start));
    Rational coeff = sign;
    Expo e(ring.nvars(), 0);
    for (const std::string& raw : split_on(term, '*')) {
      std::string f = trim(raw);
      if (f.empty()) throw ParseError(line, "empty factor in term: " + term);
      if (std::isdigit(static_cast<unsigned char>(f[0]))) {
        std::size_t slashes = 0;
        for (char c : f) {
          if (c == '/')
            ++slashes;
          else if (!std::isdigit(static_cast<unsigned char>(c)))
            throw ParseError(line, "bad constant: " + f);
        }
        if (slashes > 1 || f.back() == '/') throw ParseError(line, "bad constant: " + f);
        if (slashes == 1) {
          std::string den = f.substr(f.find('/') + 1);
          if (den.find_first_not_of('0') == std::string::npos)
            throw ParseError(line, "zero denominator: " + f);
        }
        coeff *= Rational(f);
      } else {
        std::string name = f;
        int exp = 1;
        std::size_t caret = f.find('^');
        if (caret != std::string::npos) {
          name = f.substr(0, caret);
          std::string es = f.substr(caret + 1);
          if (es.empty() || es.find_first_not_of("0123456789") != std::string::npos)
            throw ParseError(line, "exponent must be a nonnegative integer: " + f);
          exp = parse_int(es, line, "exponent");
        }
        int vi = -1;
        for (int v = 0; v < ring.nvars(); ++v)
          if (ring.vars()[v] == name) vi = v;
        if (vi < 0) throw ParseError(line, "unknown variable: " + name);
        e[vi] += exp;
      }
    }
    try {
      acc = acc + ring.monomial(std::move(e), Scalar::from_rational(field, coeff));
    } catch (const std::domain_error& ex) {
      throw ParseError(line, ex.what());
    }
  }
  return acc;
}

SessionSpec parse_session(const std::string& text, std::optional<Field> field_override) {
  std::optional<SessionSpec> spec;
  int ln = 0;
  std::istringstream in(text);
  std::string raw;
  while (std::getline(in, raw)) {
    ++ln;
    std::string s = raw;
    std::size_t hash = s.find('#');
    if (hash != std::string::npos) s = s.substr(0, hash);
    s = trim(s);
    if (s.empty()) continue;
    std::vector<std::string> toks = split_ws(s);
    const std::string& kw = toks[0];

    if (kw == "ring") {
      if (spec) throw ParseError(ln, "ring already declared");
      if (toks.size() < 4 || toks[2] != "weights")
        throw ParseError(ln, "expected: ring <field>[v1,...] weights w1 ...");
      std::size_t open = toks[1].find('[');
      std::size_t close = toks[1].find(']');
      if (open == std::string::npos || close == std::string::npos || close < open)
        throw ParseError(ln, "expected: ring <field>[v1,...]");
      std::string fs = toks[1].substr(0, open);
      Field field = Field::rationals();
      if (fs == "q") {
      } else if (fs.rfind("fp:", 0) == 0) {
        try {
          field = Field::prime(parse_u64(fs.substr(3), ln, "field characteristic"));
        } catch (const std::invalid_argument& ex) {
          throw ParseError(ln, ex.what());
        }
      } else {
        throw ParseError(ln, "unknown field (use q or fp:<prime>): " + fs);
      }
      if (field_override) field = *field_override;
      std::vector<std::string> vars;
      for (const std::string& v : split_on(toks[1].substr(open + 1, close - open - 1), ',')) {
        std::string name = trim(v);
        if (!is_name(name)) throw ParseError(ln, "bad variable name: " + name);
        vars.push_back(name);
      }
      std::vector<int> weights;
      for (std::size_t i = 3; i < toks.size(); ++i) {
        int w = parse_int(toks[i], ln, "weight");
        if (w < 1) throw ParseError(ln, "weights must be positive");
        weights.push_back(w);
      }
      try {
        spec.emplace(SessionSpec{Ring::polynomial(field, std::move(vars), std::move(weights))});
      } catch (const std::invalid_argument& ex) {
        throw ParseError(ln, ex.what());
      }
      continue;
    }

    if (!spec) throw ParseError(ln, "the ring must be declared first");
    const Ring& ring = spec->ring;

    if (kw == "ideal" || kw == "seq") {
      std::size_t eq = s.find('=');
      if (eq == std::string::npos) throw ParseError(ln, "expected: " + kw + " NAME = ...");
      std::vector<std::string> lhs = split_ws(s.substr(0, eq));
      if (lhs.size() != 2 || !is_name(lhs[1]))
        throw ParseError(ln, "expected: " + kw + " NAME = ...");
      const std::string& name = lhs[1];
      auto& target = kw == "ideal" ? spec->ideals : spec->seqs;
      for (const auto& d : target)
        if (d.name == name) throw ParseError(ln, "duplicate " + kw + " name: " + name);
      target.push_back(
          {name, parse_poly_list(ring, s.substr(eq + 1), ln, kw + " entry")});
      continue;
    }

    if (kw == "module") {
      std::size_t eq = s.find('=');
      if (eq == std::string::npos) throw ParseError(ln, "expected: module NAME = ...");
      std::vector<std::string> lhs = split_ws(s.substr(0, eq));
      if (lhs.size() != 2 || !is_name(lhs[1]))
        throw ParseError(ln, "expected: module NAME = ...");
      const std::string& name = lhs[1];
      if (spec->find_module(name)) throw ParseError(ln, "duplicate module name: " + name);
      std::string rhs = trim(s.substr(eq + 1));
      if (rhs.rfind("quotient", 0) == 0) {
        std::string iname = trim(rhs.substr(8));
        const NamedPolys* id = spec->find_ideal(iname);
        if (!id) throw ParseError(ln, "unknown ideal: " + iname);
        try {
          spec->modules.push_back(
              {name, GradedModule::cyclic(ring, id->polys), iname, {}, {0}});
        } catch (const std::exception& ex) {
          throw ParseError(ln, ex.what());
        }
        continue;
      }
      if (rhs.rfind("coker", 0) == 0) {
        std::string rest = rhs.substr(5);
        std::size_t pos = 0;
        std::vector<std::vector<std::string>> rows = parse_matrix_block(rest, pos, ln);
        std::vector<std::string> tail = split_ws(rest.substr(pos));
        if (tail.empty() || tail[0] != "shifts")
          throw ParseError(ln, "expected: coker [...] shifts s1 ...");
        std::vector<int> shifts;
        for (std::size_t i = 1; i < tail.size(); ++i)
          shifts.push_back(parse_int(tail[i], ln, "shift"));
        if (shifts.empty()) throw ParseError(ln, "at least one shift is required");
        FreeModule amb{ring, shifts};
        std::vector<std::vector<Polynomial>> prows;
        std::vector<FreeVector> rels;
        for (std::size_t r = 0; r < rows.size(); ++r) {
          if (rows[r].size() != shifts.size())
            throw ParseError(ln, "relation " + std::to_string(r + 1) + " has " +
                                     std::to_string(rows[r].size()) + " entries, expected " +
                                     std::to_string(shifts.size()));
          std::vector<Polynomial> comps;
          for (const std::string& e : rows[r]) comps.push_back(parse_polynomial(ring, e, ln));
          FreeVector v(amb, comps);
          if (!v.is_homogeneous())
            throw ParseError(ln, "relation " + std::to_string(r + 1) +
                                     " is not homogeneous: " + v.to_string());
          prows.push_back(std::move(comps));
          rels.push_back(std::move(v));
        }
        try {
          spec->modules.push_back(
              {name, GradedModule(amb, std::move(rels)), "", std::move(prows), shifts});
        } catch (const std::exception& ex) {
          throw ParseError(ln, ex.what());
        }
        continue;
      }
      throw ParseError(ln, "expected quotient or coker after =");
    }

    if (kw == "map") {
      std::size_t eq = s.find('=');
      if (eq == std::string::npos) throw ParseError(ln, "expected: map NAME = SRC -> TGT [...]");
      std::vector<std::string> lhs = split_ws(s.substr(0, eq));
      if (lhs.size() != 2 || !is_name(lhs[1]))
        throw ParseError(ln, "expected: map NAME = SRC -> TGT [...]");
      const std::string& name = lhs[1];
      if (spec->find_map(name)) throw ParseError(ln, "duplicate map name: " + name);
      std::string rhs = trim(s.substr(eq + 1));
      std::size_t arrow = rhs.find("->");
      if (arrow == std::string::npos) throw ParseError(ln, "expected: SRC -> TGT [...]");
      std::string src = trim(rhs.substr(0, arrow));
      std::string rest = rhs.substr(arrow + 2);
      std::size_t br = rest.find('[');
      if (br == std::string::npos) throw ParseError(ln, "expected a [...] block of images");
      std::string tgt = trim(rest.substr(0, br));
      const NamedModule* sm = spec->find_module(src);
      const NamedModule* tm = spec->find_module(tgt);
      if (!sm) throw ParseError(ln, "unknown module: " + src);
      if (!tm) throw ParseError(ln, "unknown module: " + tgt);
      std::size_t pos = br;
      std::vector<std::vector<std::string>> rows = parse_matrix_block(rest, pos, ln);
      if (!trim(rest.substr(pos)).empty()) throw ParseError(ln, "trailing text after the images");
      const FreeModule& samb = sm->value.ambient();
      const FreeModule& tamb = tm->value.ambient();
      if (static_cast<int>(rows.size()) != samb.rank())
        throw ParseError(ln, "expected one image row per generator of " + src);
      std::vector<FreeVector> images;
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (static_cast<int>(rows[r].size()) != tamb.rank())
          throw ParseError(ln, "image " + std::to_string(r + 1) + " has " +
                                   std::to_string(rows[r].size()) + " entries, expected " +
                                   std::to_string(tamb.rank()));
        std::vector<Polynomial> comps;
        for (const std::string& e : rows[r]) comps.push_back(parse_polynomial(ring, e, ln));
        FreeVector v(tamb, std::move(comps));
        if (!v.is_homogeneous())
          throw ParseError(ln, "image " + std::to_string(r + 1) +
                                   " is not homogeneous: " + v.to_string());
        auto deg = v.homogeneous_degree();
        if (deg && *deg != samb.shifts[r])
          throw ParseError(ln, "image " + std::to_string(r + 1) + " has degree " +
                                   std::to_string(*deg) + ", expected " +
                                   std::to_string(samb.shifts[r]));
        images.push_back(std::move(v));
      }
      spec->maps.push_back({name, src, tgt, std::move(images)});
      continue;
    }

    if (kw == "task") {
      if (toks.size() < 2) throw ParseError(ln, "expected: task KIND ...");
      TaskDecl task;
      task.line = ln;
      const std::map<std::string, TaskKind> kinds{
          {"localcohomology", TaskKind::localcohomology},
          {"genfrac", TaskKind::genfrac},
          {"compare", TaskKind::compare},
          {"filtreg", TaskKind::filtreg},
          {"synth", TaskKind::synth},
          {"ses", TaskKind::ses},
          {"tor", TaskKind::tor}};
      auto ki = kinds.find(toks[1]);
      if (ki == kinds.end()) throw ParseError(ln, "unknown task kind: " + toks[1]);
      task.kind = ki->second;
      const std::set<std::string>& keys = task_keys(task.kind);
      std::size_t i = 2;
      while (i < toks.size() && !keys.count(toks[i]) &&
             static_cast<int>(task.names.size()) < positional_count(task.kind))
        task.names.push_back(toks[i++]);
      if (static_cast<int>(task.names.size()) != positional_count(task.kind))
        throw ParseError(ln, task_kind_name(task.kind) + " takes " +
                                 std::to_string(positional_count(task.kind)) +
                                 " positional names");
      bool koszul_given = false, auto_given = false;
      while (i < toks.size()) {
        const std::string& key = toks[i];
        if (!keys.count(key))
          throw ParseError(ln, "unknown parameter for " + task_kind_name(task.kind) + ": " + key);
        if (i + 1 >= toks.size()) throw ParseError(ln, key + " expects a value");
        const std::string& val = toks[i + 1];
        i += 2;
        if (key == "window") {
          std::size_t colon = val.find(':', 1);
          if (colon == std::string::npos) throw ParseError(ln, "window expects LO:HI");
          task.window = {parse_int(val.substr(0, colon), ln, "window"),
                         parse_int(val.substr(colon + 1), ln, "window")};
          if (task.window.first > task.window.second)
            throw ParseError(ln, "window is empty: " + val);
        } else if (key == "levels") {
          task.levels = parse_int(val, ln, "levels");
          if (task.levels < 1) throw ParseError(ln, "levels must be positive");
        } else if (key == "margin") {
          task.margin = parse_int(val, ln, "margin");
          if (task.margin < 1) throw ParseError(ln, "margin must be positive");
        } else if (key == "seed") {
          task.seed = parse_u64(val, ln, "seed");
        } else if (key == "trials") {
          task.trials = parse_int(val, ln, "trials");
          if (task.trials < 1) throw ParseError(ln, "trials must be positive");
        } else if (key == "ideal") {
          if (!spec->find_ideal(val)) throw ParseError(ln, "unknown ideal: " + val);
          task.ideal = val;
        } else if (key == "koszul") {
          if (!spec->find_ideal(val)) throw ParseError(ln, "unknown ideal: " + val);
          task.koszul = val;
          koszul_given = true;
        } else if (key == "auto") {
          task.auto_depth = parse_int(val, ln, "auto");
          if (task.auto_depth < 0) throw ParseError(ln, "auto must be nonnegative");
          auto_given = true;
        } else if (key == "imax") {
          task.imax = parse_int(val, ln, "imax");
          if (task.imax < 0) throw ParseError(ln, "imax must be nonnegative");
        }
      }
      if (koszul_given && auto_given)
        throw ParseError(ln, "choose one of koszul and auto");

      auto need_module = [&](const std::string& n) {
        if (!spec->find_module(n)) throw ParseError(ln, "unknown module: " + n);
      };
      auto need_seq = [&](const std::string& n) {
        if (!spec->find_seq(n)) throw ParseError(ln, "unknown sequence: " + n);
      };
      switch (task.kind) {
        case TaskKind::synth:
          need_module(task.names[0]);
          if (!spec->find_ideal(task.names[1]))
            throw ParseError(ln, "unknown ideal: " + task.names[1]);
          break;
        case TaskKind::ses: {
          const NamedMap* f = spec->find_map(task.names[0]);
          const NamedMap* g = spec->find_map(task.names[1]);
          if (!f) throw ParseError(ln, "unknown map: " + task.names[0]);
          if (!g) throw ParseError(ln, "unknown map: " + task.names[1]);
          if (f->tgt != g->src) throw ParseError(ln, "the maps do not compose");
          need_seq(task.names[2]);
          break;
        }
        default:
          need_module(task.names[0]);
          need_seq(task.names[1]);
          break;
      }
      spec->tasks.push_back(std::move(task));
      continue;
    }

    throw ParseError(ln, "unknown directive: " + kw);
  }
  if (!spec) throw ParseError(ln ? ln : 1, "the session declares no ring");
  return std::move(*spec);
}

std::string render_session(const SessionSpec& spec) {
  std::string out = "ring " + spec.ring.field().describe() + "[";
  for (int i = 0; i < spec.ring.nvars(); ++i) {
    if (i) out += ",";
    out += spec.ring.vars()[i];
  }
  out += "] weights";
  for (int w : spec.ring.weights()) out += " " + std::to_string(w);
  out += "\n";

  auto poly_list = [](const std::vector<Polynomial>& ps) {
    std::string s;
    for (std::size_t i = 0; i < ps.size(); ++i) {
      if (i) s += ", ";
      s += ps[i].to_string();
    }
    return s;
  };
  for (const auto& d : spec.ideals) out += "ideal " + d.name + " = " + poly_list(d.polys) + "\n";
  for (const auto& m : spec.modules) {
    if (!m.quotient_of.empty()) {
      out += "module " + m.name + " = quotient " + m.quotient_of + "\n";
      continue;
    }
    out += "module " + m.name + " = coker [";
    for (std::size_t r = 0; r < m.coker_rows.size(); ++r) {
      if (r) out += ", ";
      out += "[" + poly_list(m.coker_rows[r]) + "]";
    }
    out += "] shifts";
    for (int sft : m.shifts) out += " " + std::to_string(sft);
    out += "\n";
  }
  for (const auto& f : spec.maps) {
    out += "map " + f.name + " = " + f.src + " -> " + f.tgt + " [";
    for (std::size_t r = 0; r < f.images.size(); ++r) {
      if (r) out += ", ";
      out += "[";
      for (int t = 0; t < f.images[r].rank(); ++t) {
        if (t) out += ", ";
        out += f.images[r].comp(t).to_string();
      }
      out += "]";
    }
    out += "]\n";
  }
  for (const auto& d : spec.seqs) out += "seq " + d.name + " = " + poly_list(d.polys) + "\n";
  for (const auto& t : spec.tasks) {
    out += "task " + task_kind_name(t.kind);
    for (const auto& n : t.names) out += " " + n;
    out += " window " + std::to_string(t.window.first) + ":" + std::to_string(t.window.second);
    out += " levels " + std::to_string(t.levels);
    out += " margin " + std::to_string(t.margin);
    if (!t.ideal.empty()) out += " ideal " + t.ideal;
    if (t.kind == TaskKind::synth)
      out += " seed " + std::to_string(t.seed) + " trials " + std::to_string(t.trials);
    if (t.kind == TaskKind::tor) {
      out += t.koszul.empty() ? " auto " + std::to_string(t.auto_depth) : " koszul " + t.koszul;
      out += " imax " + std::to_string(t.imax);
    }
    out += "\n";
  }
  return out;
}

}  // namespace gfcech
