#include "symspin/csv_io.hpp"

#include <charconv>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace symspin {

namespace {

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::stringstream ss(line);
  std::string f;
  while (std::getline(ss, f, ',')) fields.push_back(f);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

std::string next_line(std::istream& in, const char* what) {
  std::string line;
  if (!std::getline(in, line)) throw DataError(std::string("csv: missing ") + what);
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

double to_double(const std::string& s) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw DataError("csv: bad number '" + s + "'");
  }
  return v;
}

int read_n(std::istream& in) {
  const std::string line = next_line(in, "n= line");
  if (line.rfind("n=", 0) != 0) throw DataError("csv: first line must be n=<N>");
  const std::string digits = line.substr(2);
  int n = 0;
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
  if (ec != std::errc() || ptr != digits.data() + digits.size() || n < 1) {
    throw DataError("csv: bad particle count '" + digits + "'");
  }
  return n;
}

std::string density_header(int n) {
  std::string h;
  for (int c = 0; c <= n; ++c) {
    if (c) h += ',';
    h += "re_" + std::to_string(c) + ",im_" + std::to_string(c);
  }
  return h;
}

}  // namespace

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_ket_csv(std::ostream& out, const SymKet& psi) {
  out << "n=" << psi.n() << "\nre,im\n";
  for (int m = 0; m <= psi.n(); ++m) {
    out << format_double(psi[m].real()) << ',' << format_double(psi[m].imag()) << '\n';
  }
}

void write_density_csv(std::ostream& out, const SymDensity& rho) {
  const int n = rho.n();
  out << "n=" << n << '\n' << density_header(n) << '\n';
  for (int r = 0; r <= n; ++r) {
    for (int c = 0; c <= n; ++c) {
      if (c) out << ',';
      out << format_double(rho.mat()(r, c).real()) << ',' << format_double(rho.mat()(r, c).imag());
    }
    out << '\n';
  }
}

SymKet read_ket_csv(std::istream& in) {
  const int n = read_n(in);
  if (next_line(in, "header") != "re,im") throw DataError("csv: ket header must be re,im");
  CVector amps(n + 1);
  for (int m = 0; m <= n; ++m) {
    const auto f = split_fields(next_line(in, "ket row"));
    if (f.size() != 2) throw DataError("csv: ket rows need 2 fields");
    amps(m) = cplx(to_double(f[0]), to_double(f[1]));
  }
  return SymKet(n, std::move(amps));
}

SymDensity read_density_csv(std::istream& in) {
  const int n = read_n(in);
  if (next_line(in, "header") != density_header(n)) {
    throw DataError("csv: density header must be re_0,im_0,...");
  }
  CMatrix mat(n + 1, n + 1);
  for (int r = 0; r <= n; ++r) {
    const auto f = split_fields(next_line(in, "density row"));
    if (f.size() != static_cast<std::size_t>(2 * (n + 1))) {
      throw DataError("csv: density rows need 2(N+1) fields");
    }
    for (int c = 0; c <= n; ++c) mat(r, c) = cplx(to_double(f[2 * c]), to_double(f[2 * c + 1]));
  }
  return SymDensity(n, std::move(mat));
}

}  // namespace symspin
