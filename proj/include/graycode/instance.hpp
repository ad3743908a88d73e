#pragma once

#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "graycode/flips.hpp"
#include "graycode/objects.hpp"

namespace graycode {

struct Instance {
  Kind kind = Kind::bitstring;
  FlipFamily flip = FlipFamily::bitflip;
  std::optional<int> n;  // size parameter; meaning depends on kind
  std::optional<int> k;  // combination weight
  std::vector<Object> objects;
};

struct Certificate {
  std::vector<int> indices;  // 1-based positions into the instance list
};

namespace detail {

// size parameter of one object under its kind; -1 when the kind has none
inline int object_size(Kind kind, const Object& o) {
  switch (kind) {
    case Kind::bitstring: return static_cast<int>(std::get<BitString>(o).bits.size());
    case Kind::tuple: return -1;
    case Kind::permutation: return static_cast<int>(std::get<Permutation>(o).vals.size());
    case Kind::combination: return static_cast<int>(std::get<Combination>(o).bits.size());
    case Kind::setpartition:
    case Kind::ncsetpartition: return std::get<SetPartition>(o).ground();
    case Kind::spanningtree:
    case Kind::perfectmatching: return std::get<EdgeSubset>(o).host_n;
  }
  return -1;
}

inline void validate_object(Kind kind, const Object& o) {
  switch (kind) {
    case Kind::bitstring: require_bits(std::get<BitString>(o).bits, "bitstring"); break;
    case Kind::tuple: {
      const auto& t = std::get<Tuple2>(o);
      if (t.a < 1 || t.b < 1) fail(errc::invariant_violation, "tuple values must be positive");
      break;
    }
    case Kind::permutation: validate_permutation(std::get<Permutation>(o).vals); break;
    case Kind::combination: require_bits(std::get<Combination>(o).bits, "combination"); break;
    case Kind::setpartition: validate_set_partition(std::get<SetPartition>(o)); break;
    case Kind::ncsetpartition: {
      const auto& p = std::get<SetPartition>(o);
      validate_set_partition(p);
      if (!non_crossing(p)) fail(errc::invariant_violation, "partition has crossing blocks");
      break;
    }
    case Kind::spanningtree:
    case Kind::perfectmatching: {
      const auto& s = std::get<EdgeSubset>(o);
      SubsetRole want =
          kind == Kind::spanningtree ? SubsetRole::spanning_tree : SubsetRole::perfect_matching;
      if (s.role != want) fail(errc::kind_mismatch, "edge subset role does not match kind");
      validate_edge_subset(s);
      break;
    }
  }
}

}  // namespace detail

inline void validate_instance(Instance& inst) {
  if (!flip_applicable(inst.kind, inst.flip))
    fail(errc::inapplicable_flip, std::string(flip_name(inst.flip)) + " does not apply to " +
                                      kind_name(inst.kind));
  for (const Object& o : inst.objects) {
    if ((inst.kind == Kind::bitstring && !std::holds_alternative<BitString>(o)) ||
        (inst.kind == Kind::tuple && !std::holds_alternative<Tuple2>(o)) ||
        (inst.kind == Kind::permutation && !std::holds_alternative<Permutation>(o)) ||
        (inst.kind == Kind::combination && !std::holds_alternative<Combination>(o)) ||
        ((inst.kind == Kind::setpartition || inst.kind == Kind::ncsetpartition) &&
         !std::holds_alternative<SetPartition>(o)) ||
        ((inst.kind == Kind::spanningtree || inst.kind == Kind::perfectmatching) &&
         !std::holds_alternative<EdgeSubset>(o)))
      fail(errc::kind_mismatch, "object does not match instance kind");
    detail::validate_object(inst.kind, o);
  }
  if (inst.kind != Kind::tuple) {
    for (const Object& o : inst.objects) {
      int s = detail::object_size(inst.kind, o);
      if (!inst.n) inst.n = s;
      if (*inst.n != s) fail(errc::mixed_sizes, "objects of different sizes in one instance");
    }
  }
  if (inst.kind == Kind::combination) {
    for (const Object& o : inst.objects) {
      int w = bit_weight(std::get<Combination>(o).bits);
      if (!inst.k) inst.k = w;
      if (*inst.k != w) fail(errc::mixed_sizes, "combinations of different weights");
    }
  }
  std::set<Object> seen;
  for (const Object& o : inst.objects)
    if (!seen.insert(o).second)
      fail(errc::duplicate_object, "duplicate object '" + format_object(o) + "'");
}

inline size_t instance_size(const Instance& inst) { return inst.objects.size(); }

// ---- file format ----
// header: kind=<tag> flip=<tag> [n=<int>] [k=<int>]
// then one object per line; '#' starts a comment line

inline Instance read_instance(std::istream& in) {
  Instance inst;
  std::string line;
  bool have_header = false;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    if (!have_header) {
      std::istringstream hs(line);
      std::string tok;
      bool have_kind = false, have_flip = false;
      while (hs >> tok) {
        auto eq = tok.find('=');
        if (eq == std::string::npos)
          fail(errc::malformed_text, "header token without '=' on line " + std::to_string(lineno));
        std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
        if (key == "kind") {
          inst.kind = kind_from_name(val);
          have_kind = true;
        } else if (key == "flip") {
          inst.flip = flip_from_name(val);
          have_flip = true;
        } else if (key == "n" || key == "k") {
          int v = 0;
          try {
            size_t used = 0;
            v = std::stoi(val, &used);
            if (used != val.size()) throw std::invalid_argument(val);
          } catch (const std::exception&) {
            fail(errc::malformed_text, "bad integer in header on line " + std::to_string(lineno));
          }
          (key == "n" ? inst.n : inst.k) = v;
        } else {
          fail(errc::malformed_text, "unknown header key '" + key + "'");
        }
      }
      if (!have_kind || !have_flip)
        fail(errc::malformed_text, "header needs kind= and flip=");
      have_header = true;
      continue;
    }
    try {
      inst.objects.push_back(parse_object(inst.kind, line));
    } catch (Error& e) {
      throw Error(e.code(), std::string(e.what()) + " (line " + std::to_string(lineno) + ")");
    }
  }
  if (!have_header) fail(errc::malformed_text, "missing instance header");
  validate_instance(inst);
  return inst;
}

inline Instance read_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(errc::io_failure, "cannot open '" + path + "'");
  return read_instance(in);
}

inline void write_instance(const Instance& inst, std::ostream& out) {
  out << "kind=" << kind_name(inst.kind) << " flip=" << flip_name(inst.flip);
  if (inst.kind != Kind::tuple && inst.n) out << " n=" << *inst.n;
  if (inst.kind == Kind::combination && inst.k) out << " k=" << *inst.k;
  out << "\n";
  for (const Object& o : inst.objects) out << format_object(o) << "\n";
}

inline void write_instance_file(const Instance& inst, const std::string& path) {
  std::ofstream out(path);
  if (!out) fail(errc::io_failure, "cannot open '" + path + "' for writing");
  write_instance(inst, out);
}

inline Certificate read_certificate(std::istream& in) {
  Certificate c;
  int v;
  while (in >> v) c.indices.push_back(v);
  return c;
}

inline Certificate read_certificate_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(errc::io_failure, "cannot open '" + path + "'");
  return read_certificate(in);
}

inline void write_certificate(const Certificate& c, std::ostream& out) {
  for (size_t i = 0; i < c.indices.size(); ++i) out << (i ? " " : "") << c.indices[i];
  out << "\n";
}

inline void write_certificate_file(const Certificate& c, const std::string& path) {
  std::ofstream out(path);
  if (!out) fail(errc::io_failure, "cannot open '" + path + "' for writing");
  write_certificate(c, out);
}

// ---- named example generators ----

inline Instance make_instance(Kind kind, FlipFamily flip, const std::vector<std::string>& texts) {
  Instance inst;
  inst.kind = kind;
  inst.flip = flip;
  for (const auto& t : texts) inst.objects.push_back(parse_object(kind, t));
  validate_instance(inst);
  return inst;
}

inline Instance make_full_bn(int n, FlipFamily flip = FlipFamily::bitflip) {
  if (n < 1) fail(errc::invariant_violation, "full-Bn needs n >= 1");
  return make_instance(Kind::bitstring, flip, all_bitstrings(n));
}

inline Instance make_full_sn(int n, FlipFamily flip = FlipFamily::swap) {
  if (n < 1) fail(errc::invariant_violation, "full-Sn needs n >= 1");
  Instance inst;
  inst.kind = Kind::permutation;
  inst.flip = flip;
  for (auto& p : all_permutations(n)) inst.objects.push_back(Permutation{std::move(p)});
  validate_instance(inst);
  return inst;
}

inline Instance make_named_instance(const std::string& name, std::optional<int> n) {
  if (name == "abstract-no")
    return make_instance(Kind::bitstring, FlipFamily::bitflip, {"000", "001", "010", "100"});
  if (name == "abstract-yes")
    return make_instance(Kind::permutation, FlipFamily::swap, {"1234", "1324", "1243"});
  if (name == "full-Bn") return make_full_bn(n.value_or(3));
  if (name == "full-Sn") return make_full_sn(n.value_or(3));
  if (name == "grid-sample") {
    std::vector<std::string> pts;
    for (int a = 1; a <= 3; ++a)
      for (int b = 1; b <= 3; ++b) pts.push_back(std::to_string(a) + " " + std::to_string(b));
    return make_instance(Kind::tuple, FlipFamily::pm1_tuple, pts);
  }
  fail(errc::malformed_text, "unknown instance name '" + name + "'");
}

}  // namespace graycode
