#include "nlem/csv.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

namespace nlem {

namespace {

// 17 significant digits make the decimal form injective over doubles.
std::string format_value(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

void save_text(const std::string& content, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw std::runtime_error("failed writing " + path);
}

}  // namespace

std::string encode_trace_csv(const std::vector<TraceRecord<double>>& trace) {
  std::string out = "iter,objective,primal_residual\n";
  for (const auto& rec : trace) {
    out += std::to_string(rec.iter);
    out += ',';
    out += format_value(rec.objective);
    out += ',';
    if (!std::isnan(rec.primal_residual)) out += format_value(rec.primal_residual);
    out += '\n';
  }
  return out;
}

void write_trace_csv(const std::vector<TraceRecord<double>>& trace, const std::string& path) {
  save_text(encode_trace_csv(trace), path);
}

std::string encode_psnr_csv(const std::vector<double>& psnr_per_iter) {
  std::string out = "iter,psnr\n";
  for (std::size_t t = 0; t < psnr_per_iter.size(); ++t) {
    out += std::to_string(t + 1);
    out += ',';
    out += format_value(psnr_per_iter[t]);
    out += '\n';
  }
  return out;
}

void write_psnr_csv(const std::vector<double>& psnr_per_iter, const std::string& path) {
  save_text(encode_psnr_csv(psnr_per_iter), path);
}

std::string encode_bench_csv(const std::vector<BenchRow>& rows) {
  std::string out = "image,sigma,method,mean_psnr,std_psnr,R\n";
  for (const auto& row : rows) {
    out += row.image;
    out += ',';
    out += format_value(row.sigma);
    out += ',';
    out += row.method;
    out += ',';
    out += format_value(row.mean_psnr);
    out += ',';
    out += format_value(row.std_psnr);
    out += ',';
    out += std::to_string(row.repeats);
    out += '\n';
  }
  return out;
}

void write_bench_csv(const std::vector<BenchRow>& rows, const std::string& path) {
  save_text(encode_bench_csv(rows), path);
}

}  // namespace nlem
