#include "hftlab/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "hftlab/errors.hpp"

namespace hftlab {

std::string format_double(double v) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

namespace {

void write_rows(std::ostream& os, const std::vector<double>& xs, const std::vector<complex>& vs) {
  for (std::size_t i = 0; i < xs.size(); ++i)
    os << format_double(xs[i]) << ',' << format_double(vs[i].real()) << ',' << format_double(vs[i].imag()) << '\n';
}

double parse_double(std::string_view tok) {
  while (!tok.empty() && (tok.front() == ' ' || tok.front() == '\t')) tok.remove_prefix(1);
  while (!tok.empty() && (tok.back() == ' ' || tok.back() == '\r' || tok.back() == '\t')) tok.remove_suffix(1);
  double v = 0.0;
  auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (res.ec != std::errc() || res.ptr != tok.data() + tok.size())
    throw InputError("csv: not a number: '" + std::string(tok) + "'");
  return v;
}

struct Rows {
  std::vector<double> x;
  std::vector<complex> v;
  std::vector<std::string> comments;
};

Rows read_rows(std::istream& is, std::string_view header) {
  Rows r;
  std::string line;
  bool seen_header = false;
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line.front() == '#') {
      r.comments.push_back(line);
      continue;
    }
    if (!seen_header) {
      if (line != header) throw InputError("csv: expected header '" + std::string(header) + "'");
      seen_header = true;
      continue;
    }
    std::string_view sv(line);
    const auto c1 = sv.find(',');
    const auto c2 = c1 == std::string_view::npos ? c1 : sv.find(',', c1 + 1);
    if (c2 == std::string_view::npos || sv.find(',', c2 + 1) != std::string_view::npos)
      throw InputError("csv: expected three columns");
    r.x.push_back(parse_double(sv.substr(0, c1)));
    r.v.emplace_back(parse_double(sv.substr(c1 + 1, c2 - c1 - 1)), parse_double(sv.substr(c2 + 1)));
  }
  if (!seen_header) throw InputError("csv: missing header");
  return r;
}

}  // namespace

void write_csv(std::ostream& os, const SampledHalfLineFunction& f) {
  os << "s,re,im\n";
  write_rows(os, f.grid().nodes(), f.values());
}

void write_csv(std::ostream& os, const HardyLineSample& phi) {
  os << "# y=" << format_double(phi.y()) << " hbar=" << format_double(phi.hbar()) << '\n';
  os << "x,re,im\n";
  write_rows(os, phi.x_nodes(), phi.values());
}

void write_eigenvalues_csv(std::ostream& os, const std::vector<double>& eigenvalues) {
  os << "k,lambda\n";
  for (std::size_t k = 0; k < eigenvalues.size(); ++k) os << k + 1 << ',' << format_double(eigenvalues[k]) << '\n';
}

void write_demo_csv(std::ostream& os, const TimeRepresentation& rep) {
  os << "t,re,im,phase\n";
  const auto& t = rep.sample.x_nodes();
  const auto& v = rep.sample.values();
  for (std::size_t j = 0; j < t.size(); ++j)
    os << format_double(t[j]) << ',' << format_double(v[j].real()) << ',' << format_double(v[j].imag()) << ','
       << format_double(rep.unwrapped_phase[j]) << '\n';
}

SampledHalfLineFunction read_sampled_csv(std::istream& is, const QuadratureGrid& grid, double hbar) {
  auto r = read_rows(is, "s,re,im");
  if (r.x.size() != grid.size()) throw InputError("csv: row count does not match grid");
  for (std::size_t i = 0; i < r.x.size(); ++i)
    if (std::abs(r.x[i] - grid.nodes()[i]) > 1e-12 * std::max(1.0, std::abs(grid.nodes()[i])))
      throw InputError("csv: node mismatch at row " + std::to_string(i + 1));
  return SampledHalfLineFunction(grid, std::move(r.v), hbar);
}

HardyLineSample read_line_csv(std::istream& is) {
  auto r = read_rows(is, "x,re,im");
  double y = 0.0, hbar = 1.0;
  bool have_y = false;
  for (const auto& c : r.comments) {
    std::istringstream ss(c.substr(1));
    ss.imbue(std::locale::classic());
    std::string tok;
    while (ss >> tok) {
      if (tok.rfind("y=", 0) == 0) {
        y = parse_double(std::string_view(tok).substr(2));
        have_y = true;
      } else if (tok.rfind("hbar=", 0) == 0) {
        hbar = parse_double(std::string_view(tok).substr(5));
      }
    }
  }
  if (!have_y) throw InputError("csv: missing '# y=' line");
  return HardyLineSample(y, std::move(r.x), std::move(r.v), hbar);
}

void write_file(const std::string& path, const std::string& contents) {
  const std::filesystem::path p(path);
  std::error_code ec;
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path(), ec);
  std::ofstream out(p, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << contents;
  if (!out) throw Error("write failed: " + path);
}

}  // namespace hftlab
