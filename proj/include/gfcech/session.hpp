#pragma once

#include "gfcech/comparison.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gfcech {

struct ParseError : std::runtime_error {
  int line;
  ParseError(int l, const std::string& msg)
      : std::runtime_error("line " + std::to_string(l) + ": " + msg), line(l) {}
};

enum class TaskKind { localcohomology, genfrac, compare, filtreg, synth, ses, tor };

std::string task_kind_name(TaskKind k);

/* One task line. The positional names resolve against earlier declarations:
   localcohomology/genfrac/compare/filtreg take (module, sequence), synth takes
   (module, ideal), ses takes (map, map, sequence), tor takes (module,
   sequence). */
struct TaskDecl {
  TaskKind kind = TaskKind::localcohomology;
  int line = 0;
  std::vector<std::string> names;
  std::pair<int, int> window{-8, 2};
  int levels = 8;
  int margin = 2;
  std::uint64_t seed = 0;
  int trials = 20;
  std::string ideal;
  std::string koszul;
  int auto_depth = 6;
  int imax = 1;
};

struct NamedPolys {
  std::string name;
  std::vector<Polynomial> polys;
};

struct NamedModule {
  std::string name;
  GradedModule value;
  /* Declaration echo: a quotient of the named ideal, or a cokernel
     presentation with the given relation rows and ambient shifts. */
  std::string quotient_of;
  std::vector<std::vector<Polynomial>> coker_rows;
  std::vector<int> shifts;
};

struct NamedMap {
  std::string name;
  std::string src, tgt;
  std::vector<FreeVector> images;
};

struct SessionSpec {
  Ring ring;
  std::vector<NamedPolys> ideals;
  std::vector<NamedPolys> seqs;
  std::vector<NamedModule> modules;
  std::vector<NamedMap> maps;
  std::vector<TaskDecl> tasks;

  const NamedPolys* find_ideal(const std::string& name) const;
  const NamedPolys* find_seq(const std::string& name) const;
  const NamedModule* find_module(const std::string& name) const;
  const NamedMap* find_map(const std::string& name) const;
};

/* Line-based session grammar; declarations come before use, the ring first.
   Unknown directives, unknown parameter keys, unresolved names, inhomogeneous
   polynomials, and out-of-range parameters are line-annotated errors. A field
   override re-reads every coefficient in the given field. */
SessionSpec parse_session(const std::string& text, std::optional<Field> field_override = {});

/* Canonical text form; parse_session(render_session(s)) reproduces s. */
std::string render_session(const SessionSpec& spec);

/* Sums of terms; a term is '*'-separated factors, each a rational constant
   (a or a/b), a variable, or variable^exponent. */
Polynomial parse_polynomial(const Ring& ring, const std::string& text, int line = 0);

}  // namespace gfcech
