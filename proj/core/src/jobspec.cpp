#include "groupdepth/jobspec.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "groupdepth/groups.hpp"

namespace groupdepth {

namespace {

std::string strip(const std::string &s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos)
    return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

unsigned parse_unsigned(const std::string &s, const std::string &what) {
  try {
    std::size_t idx = 0;
    unsigned long v = std::stoul(strip(s), &idx);
    if (idx != strip(s).size())
      throw std::invalid_argument("");
    return static_cast<unsigned>(v);
  } catch (const std::exception &) {
    throw ParseError("expected a number for " + what + ", got '" + s + "'");
  }
}

std::vector<Permutation> parse_generator_list(const std::string &body, unsigned degree) {
  std::vector<Permutation> gens;
  std::stringstream ss(body);
  std::string tok;
  while (std::getline(ss, tok, ';')) {
    tok = strip(tok);
    if (!tok.empty())
      gens.push_back(Permutation::parse_cycles(tok, degree));
  }
  return gens;
}

// split "name:rest" at the first colon
std::pair<std::string, std::string> split_head(const std::string &s) {
  std::size_t c = s.find(':');
  if (c == std::string::npos)
    return {strip(s), ""};
  return {strip(s.substr(0, c)), strip(s.substr(c + 1))};
}

// split a stage chain on '/' at brace depth zero
std::vector<std::string> split_stages(const std::string &spec) {
  std::vector<std::string> stages;
  std::string cur;
  int depth = 0;
  for (char c : spec) {
    if (c == '{')
      ++depth;
    else if (c == '}')
      --depth;
    if (c == '/' && depth == 0) {
      stages.push_back(strip(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!strip(cur).empty())
    stages.push_back(strip(cur));
  if (depth != 0)
    throw ParseError("unbalanced braces in subgroup spec: " + spec);
  return stages;
}

std::string unbrace(const std::string &s, const std::string &what) {
  std::string t = strip(s);
  if (t.size() < 2 || t.front() != '{' || t.back() != '}')
    throw ParseError(what + " expects a braced argument, got '" + s + "'");
  return strip(t.substr(1, t.size() - 2));
}

} // namespace

PermGroup parse_group_text(const std::string &text, const std::string &origin) {
  std::stringstream ss(text);
  std::string line;
  std::vector<std::string> lines;
  while (std::getline(ss, line)) {
    line = strip(line);
    if (line.empty() || line[0] == '#')
      continue;
    lines.push_back(line);
  }
  if (lines.empty() || lines[0] != "permgroup v1")
    throw ParseError(origin + ": expected a 'permgroup v1' header");
  if (lines.size() < 2 || lines[1].rfind("degree ", 0) != 0)
    throw ParseError(origin + ": expected a 'degree N' line");
  unsigned degree = parse_unsigned(lines[1].substr(7), "degree");
  if (degree == 0 || degree > (1u << 16))
    throw ParseError(origin + ": degree out of range");
  std::vector<Permutation> gens;
  for (std::size_t i = 2; i < lines.size(); ++i)
    gens.push_back(Permutation::parse_cycles(lines[i], degree));
  return PermGroup(degree, std::move(gens));
}

PermGroup parse_group_file(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw ParseError("cannot open group file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_group_text(buf.str(), path);
}

NamedGroup parse_group_source(const std::string &raw, const Limits &limits) {
  const std::string spec = strip(raw);
  if (spec.empty())
    throw ParseError("empty group spec");
  auto [head, rest] = split_head(spec);

  if (head == "symmetric")
    return {symmetric_group(parse_unsigned(rest, "symmetric")), "S" + rest};
  if (head == "alternating")
    return {alternating_group(parse_unsigned(rest, "alternating")), "A" + rest};
  if (head == "cyclic")
    return {cyclic_group(parse_unsigned(rest, "cyclic")), "C" + rest};
  if (head == "dihedral")
    return {dihedral_group(parse_unsigned(rest, "dihedral")),
            "D" + std::to_string(2 * parse_unsigned(rest, "dihedral"))};
  if (head == "psl2")
    return {psl2(parse_unsigned(rest, "psl2")), "L2(" + rest + ")"};
  if (head == "pgl2")
    return {pgl2(parse_unsigned(rest, "pgl2")), "PGL2(" + rest + ")"};
  if (head == "pgammal2")
    return {pgammal2(parse_unsigned(rest, "pgammal2")), "PGammaL2(" + rest + ")"};
  if (head == "mathieu11")
    return {mathieu11(), "M11"};
  if (head == "mathieu11_deg12")
    return {mathieu11_degree12(), "M11(deg 12)"};
  if (head == "generators") {
    auto [deg_str, gens_str] = split_head(rest);
    unsigned degree = parse_unsigned(deg_str, "generators degree");
    if (degree == 0 || degree > limits.max_degree)
      throw ParseError("generator spec degree out of range");
    return {PermGroup(degree, parse_generator_list(gens_str, degree)),
            "<degree-" + deg_str + " group>"};
  }
  if (head == "file")
    return {parse_group_file(rest), rest};
  if (std::filesystem::exists(spec))
    return {parse_group_file(spec), spec};
  throw ParseError("unrecognized group spec: " + spec);
}

PermGroup build_subgroup(const PermGroup &parent, const std::string &spec,
                         const Limits &limits) {
  PermGroup current = parent;
  for (const std::string &stage : split_stages(spec)) {
    auto [head, rest] = split_head(stage);

    if (head == "generated_by") {
      auto gens = parse_generator_list(rest, parent.degree());
      PermGroup h(parent.degree(), std::move(gens));
      if (!is_subgroup(h, current))
        throw ParseError("generated_by: not a subgroup of the current group");
      current = std::move(h);
    } else if (head == "stabilizer_of_points") {
      std::string body = strip(rest);
      if (body.size() < 2 || body.front() != '[' || body.back() != ']')
        throw ParseError("stabilizer_of_points expects [list]");
      std::vector<unsigned> pts;
      std::stringstream ss(body.substr(1, body.size() - 2));
      std::string tok;
      while (std::getline(ss, tok, ',')) {
        unsigned p = parse_unsigned(tok, "stabilizer point");
        if (p == 0 || p > parent.degree())
          throw ParseError("stabilizer point out of range 1.." +
                           std::to_string(parent.degree()));
        pts.push_back(p - 1);
      }
      current = current.pointwise_stabilizer(pts);
    } else if (head == "derived_subgroup") {
      current = current.derived_subgroup();
    } else if (head == "normal_closure") {
      auto seeds = parse_generator_list(rest, parent.degree());
      for (const auto &s : seeds)
        if (!current.contains(s))
          throw ParseError("normal_closure: seed outside the current group");
      current = current.normal_closure(seeds);
    } else if (head == "normalizer_of") {
      PermGroup k = build_subgroup(current, unbrace(rest, "normalizer_of"), limits);
      current = current.normalizer_of(k, limits);
    } else if (head == "normalizer_of_cyclic") {
      unsigned n = parse_unsigned(rest, "normalizer_of_cyclic");
      if (current.order() > limits.max_order)
        throw LimitError("element search needs |G| <= " +
                         std::to_string(limits.max_order));
      std::optional<Permutation> x;
      current.for_each_element([&](const Permutation &e) {
        if (e.order() == n) {
          x = e;
          return false;
        }
        return true;
      });
      if (!x)
        throw ParseError("normalizer_of_cyclic: no element of order " + rest);
      current = current.normalizer_of(PermGroup(parent.degree(), {*x}), limits);
    } else if (head == "group") {
      NamedGroup g = parse_group_source(unbrace(rest, "group"), limits);
      if (g.group.degree() != parent.degree() || !is_subgroup(g.group, current))
        throw ParseError("group: constructed group is not a subgroup");
      current = std::move(g.group);
    } else if (head == "expect_order") {
      if (current.order() != BigInt(strip(rest)))
        throw ParseError("expect_order " + rest + " failed, actual order is " +
                         current.order().str());
    } else {
      throw ParseError("unrecognized subgroup stage: " + stage);
    }
  }
  return current;
}

} // namespace groupdepth
