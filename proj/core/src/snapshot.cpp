#include "hpe/snapshot.hpp"

#include <bit>
#include <cinttypes>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>
#include <vector>

#include "hpe/errors.hpp"

namespace hpe {

namespace {

static_assert(std::endian::native == std::endian::little,
              "snapshot payloads are little-endian; byte swapping is not implemented");

void write_doubles(std::ofstream& out, const std::vector<double>& v) {
  out.write(reinterpret_cast<const char*>(v.data()),
            static_cast<std::streamsize>(v.size() * sizeof(double)));
}

void read_doubles(std::ifstream& in, std::vector<double>& v) {
  in.read(reinterpret_cast<char*>(v.data()),
          static_cast<std::streamsize>(v.size() * sizeof(double)));
  if (!in) throw HeaderMismatch("payload shorter than the header promises");
}

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

void write_snapshot(const State& s, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  const Grid& g = s.v[0].grid;
  out << "HPE-SNAPSHOT v1\n";
  out << "nx=" << g.nx << " ny=" << g.ny << " nz=" << g.nz << "\n";
  out << "h=" << format_double(g.h) << " t=" << format_double(s.t) << "\n";
  out << "byte_order=little element=f64\n";
  out << "fields=v1:" << parity_name(s.v[0].parity) << ",v2:" << parity_name(s.v[1].parity)
      << ",T:" << parity_name(s.T.parity) << "\n";
  out << "payload\n";
  write_doubles(out, s.v[0].values);
  write_doubles(out, s.v[1].values);
  write_doubles(out, s.T.values);
  if (!out) throw Error("write failed for '" + path + "'");
}

State read_snapshot(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::string line;
  auto next = [&]() -> std::string {
    if (!std::getline(in, line)) throw HeaderMismatch("truncated header in '" + path + "'");
    return line;
  };

  if (next() != "HPE-SNAPSHOT v1") throw HeaderMismatch("bad magic in '" + path + "'");
  int nx = 0, ny = 0, nz = 0;
  if (std::sscanf(next().c_str(), "nx=%d ny=%d nz=%d", &nx, &ny, &nz) != 3)
    throw HeaderMismatch("bad grid line");
  double h = 0.0, t = 0.0;
  if (std::sscanf(next().c_str(), "h=%lf t=%lf", &h, &t) != 2)
    throw HeaderMismatch("bad h/t line");
  if (next() != "byte_order=little element=f64") throw HeaderMismatch("bad encoding line");
  char p1[16], p2[16], p3[16];
  if (std::sscanf(next().c_str(), "fields=v1:%15[a-z],v2:%15[a-z],T:%15[a-z]", p1, p2, p3) != 3)
    throw HeaderMismatch("bad fields line");
  if (next() != "payload") throw HeaderMismatch("missing payload marker");

  Grid g(nx, ny, nz, h);
  ScalarField v1(g, parity_from_name(p1));
  ScalarField v2(g, parity_from_name(p2));
  ScalarField T(g, parity_from_name(p3));
  read_doubles(in, v1.values);
  read_doubles(in, v2.values);
  read_doubles(in, T.values);
  char extra;
  if (in.read(&extra, 1)) throw HeaderMismatch("payload longer than the header promises");

  // Bypass make_state: a snapshot restores the exact stored values.
  State s;
  s.v = {std::move(v1), std::move(v2)};
  s.T = std::move(T);
  s.t = t;
  return s;
}

void write_half_snapshot(const HalfField& v1, const HalfField& v2, const HalfField& T,
                         const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  out << "HPE-SNAPSHOT-HALF v1\n";
  out << "nx=" << v1.nx << " ny=" << v1.ny << " nz_half=" << v1.nz_half << "\n";
  out << "h=" << format_double(v1.h) << "\n";
  out << "byte_order=little element=f64\n";
  out << "fields=v1,v2,T\n";
  out << "payload\n";
  write_doubles(out, v1.values);
  write_doubles(out, v2.values);
  write_doubles(out, T.values);
  if (!out) throw Error("write failed for '" + path + "'");
}

HalfData read_half_snapshot(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::string line;
  auto next = [&]() -> std::string {
    if (!std::getline(in, line)) throw HeaderMismatch("truncated header in '" + path + "'");
    return line;
  };
  if (next() != "HPE-SNAPSHOT-HALF v1") throw HeaderMismatch("bad magic in '" + path + "'");
  int nx = 0, ny = 0, nzh = 0;
  if (std::sscanf(next().c_str(), "nx=%d ny=%d nz_half=%d", &nx, &ny, &nzh) != 3)
    throw HeaderMismatch("bad grid line");
  double h = 0.0;
  if (std::sscanf(next().c_str(), "h=%lf", &h) != 1) throw HeaderMismatch("bad h line");
  if (next() != "byte_order=little element=f64") throw HeaderMismatch("bad encoding line");
  if (next() != "fields=v1,v2,T") throw HeaderMismatch("bad fields line");
  if (next() != "payload") throw HeaderMismatch("missing payload marker");

  HalfData d{HalfField(nx, ny, nzh, h), HalfField(nx, ny, nzh, h), HalfField(nx, ny, nzh, h)};
  read_doubles(in, d.v1.values);
  read_doubles(in, d.v2.values);
  read_doubles(in, d.T.values);
  char extra;
  if (in.read(&extra, 1)) throw HeaderMismatch("payload longer than the header promises");
  return d;
}

}  // namespace hpe
