#include "mihull/instance_io.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace mihull {

namespace {

struct Line {
  int number = 0;
  std::vector<std::string> tokens;
  std::vector<int> cols;  // 1-based column of each token
};

[[noreturn]] void parse_fail(int line, int col, const std::string& msg) {
  throw Error(Errc::Parse, "line " + std::to_string(line) + ":" + std::to_string(col) + ": " + msg,
              line, col);
}

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  int lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view raw =
        eol == std::string_view::npos ? text.substr(pos) : text.substr(pos, eol - pos);
    ++lineno;
    if (std::size_t hash = raw.find('#'); hash != std::string_view::npos)
      raw = raw.substr(0, hash);
    Line line;
    line.number = lineno;
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t' || raw[i] == '\r')) ++i;
      std::size_t start = i;
      while (i < raw.size() && raw[i] != ' ' && raw[i] != '\t' && raw[i] != '\r') ++i;
      if (i > start) {
        line.tokens.emplace_back(raw.substr(start, i - start));
        line.cols.push_back(static_cast<int>(start) + 1);
      }
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    if (eol == std::string_view::npos) break;
    pos = eol + 1;
  }
  return lines;
}

Rat parse_rat_at(const Line& line, std::size_t t) {
  try {
    return parse_rat(line.tokens[t]);
  } catch (const Error&) {
    parse_fail(line.number, line.cols[t], "invalid rational '" + line.tokens[t] + "'");
  }
}

int parse_int_field(const Line& line, std::size_t t, std::string_view key) {
  const std::string& tok = line.tokens[t];
  const std::string prefix = std::string(key) + "=";
  if (tok.rfind(prefix, 0) != 0) parse_fail(line.number, line.cols[t], "expected " + prefix + "<int>");
  try {
    std::size_t used = 0;
    int v = std::stoi(tok.substr(prefix.size()), &used);
    if (used != tok.size() - prefix.size()) throw std::invalid_argument("trailing");
    return v;
  } catch (const std::exception&) {
    parse_fail(line.number, line.cols[t], "expected " + prefix + "<int>");
  }
}

}  // namespace

Instance parse_instance(std::string_view text) {
  std::vector<Line> lines = tokenize(text);
  if (lines.empty()) parse_fail(1, 1, "empty instance");
  const Line& head = lines[0];
  if (head.tokens.size() != 3 || head.tokens[0] != "mixed")
    parse_fail(head.number, head.cols[0], "expected header 'mixed n=<int> d=<int>'");
  int n = parse_int_field(head, 1, "n");
  int d = parse_int_field(head, 2, "d");
  if (n < 0 || d < 0 || n + d < 1) parse_fail(head.number, head.cols[1], "invalid space");
  MixedSpace space(n, d);
  const std::size_t k = static_cast<std::size_t>(space.dim());

  if (lines.size() < 2) parse_fail(head.number, 1, "missing body marker 'hrep' or 'vrep'");
  const Line& marker = lines[1];
  if (marker.tokens.size() != 1 || (marker.tokens[0] != "hrep" && marker.tokens[0] != "vrep"))
    parse_fail(marker.number, marker.cols[0], "expected body marker 'hrep' or 'vrep'");

  if (marker.tokens[0] == "hrep") {
    std::vector<RatVec> rows;
    std::vector<Rat> rhs;
    for (std::size_t li = 2; li < lines.size(); ++li) {
      const Line& line = lines[li];
      if (line.tokens.size() != k + 2) parse_fail(line.number, line.cols[0], "expected k coefficients, '<=', rhs");
      if (line.tokens[k] != "<=") parse_fail(line.number, line.cols[k], "expected '<='");
      RatVec a(k);
      for (std::size_t j = 0; j < k; ++j) a[j] = parse_rat_at(line, j);
      rows.push_back(std::move(a));
      rhs.push_back(parse_rat_at(line, k + 1));
    }
    RatMat A(rows.size(), k);
    RatVec b(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      A.set_row(i, rows[i]);
      b[i] = rhs[i];
    }
    return HRep(space, std::move(A), std::move(b));
  }

  std::vector<RatVec> pts, rays;
  for (std::size_t li = 2; li < lines.size(); ++li) {
    const Line& line = lines[li];
    if (line.tokens.size() != k + 1 || (line.tokens[0] != "v" && line.tokens[0] != "r"))
      parse_fail(line.number, line.cols[0], "expected 'v' or 'r' followed by k coordinates");
    RatVec p(k);
    for (std::size_t j = 0; j < k; ++j) p[j] = parse_rat_at(line, j + 1);
    (line.tokens[0] == "v" ? pts : rays).push_back(std::move(p));
  }
  try {
    return VRep(space, std::move(pts), std::move(rays));
  } catch (const Error& e) {
    if (e.code() == Errc::ZeroRay) parse_fail(lines.back().number, 1, "zero ray");
    throw;
  }
}

std::string format_instance(const Instance& inst) {
  std::ostringstream out;
  const MixedSpace& space = instance_space(inst);
  out << "mixed n=" << space.n << " d=" << space.d << "\n";
  if (const HRep* h = std::get_if<HRep>(&inst)) {
    out << "hrep\n";
    const HRep canon = canonicalize_rows(*h);
    const std::size_t k = canon.space.dim();
    std::vector<RatVec> rows;
    for (std::size_t i = 0; i < canon.rows(); ++i) {
      RatVec full(k + 1);
      for (std::size_t j = 0; j < k; ++j) full[j] = canon.A.at(i, j);
      full[k] = canon.b[i];
      rows.push_back(std::move(full));
    }
    rows = sort_unique_points(std::move(rows));
    for (const auto& row : rows) {
      for (std::size_t j = 0; j < k; ++j) out << format_rat(row[j]) << ' ';
      out << "<= " << format_rat(row[k]) << "\n";
    }
  } else {
    const VRep& v = std::get<VRep>(inst);
    out << "vrep\n";
    for (const auto& p : v.points) {  // already canonical
      out << 'v';
      for (const Rat& q : p) out << ' ' << format_rat(q);
      out << "\n";
    }
    for (const auto& r : v.rays) {
      out << 'r';
      for (const Rat& q : r) out << ' ' << format_rat(q);
      out << "\n";
    }
  }
  return out.str();
}

PiecewiseAffineConcave parse_objective(std::string_view text, const MixedSpace& space) {
  const std::size_t k = static_cast<std::size_t>(space.dim());
  PiecewiseAffineConcave f;
  for (const Line& line : tokenize(text)) {
    if (line.tokens.size() != k + 2) parse_fail(line.number, line.cols[0], "expected k coefficients, '|', constant");
    if (line.tokens[k] != "|") parse_fail(line.number, line.cols[k], "expected '|'");
    RatVec c(k);
    for (std::size_t j = 0; j < k; ++j) c[j] = parse_rat_at(line, j);
    f.pieces.emplace_back(std::move(c), parse_rat_at(line, k + 1));
  }
  if (f.pieces.empty()) throw Error(Errc::Parse, "objective with no pieces", 1, 1);
  return f;
}

std::string format_objective(const PiecewiseAffineConcave& f) {
  std::ostringstream out;
  for (const auto& [c, c0] : f.pieces) {
    for (std::size_t j = 0; j < c.size(); ++j) out << format_rat(c[j]) << ' ';
    out << "| " << format_rat(c0) << "\n";
  }
  return out.str();
}

}  // namespace mihull
