#ifndef NLEM_CSV_HPP
#define NLEM_CSV_HPP

#include <string>
#include <vector>

#include "nlem/types.hpp"

namespace nlem {

/// Solver convergence table, header "iter,objective,primal_residual". Values
/// are written with enough digits to round-trip; a NaN residual (solvers
/// without one) becomes an empty field.
std::string encode_trace_csv(const std::vector<TraceRecord<double>>& trace);
void write_trace_csv(const std::vector<TraceRecord<double>>& trace, const std::string& path);

/// Image-quality-per-iteration table, header "iter,psnr"; entry t-1 is
/// iteration t.
std::string encode_psnr_csv(const std::vector<double>& psnr_per_iter);
void write_psnr_csv(const std::vector<double>& psnr_per_iter, const std::string& path);

/// One benchmark cell: a (image, noise level, method) triple averaged over
/// `repeats` noise realizations.
struct BenchRow {
  std::string image;
  double sigma = 0.0;
  std::string method;
  double mean_psnr = 0.0;
  double std_psnr = 0.0;
  int repeats = 0;
};

/// Benchmark table, header "image,sigma,method,mean_psnr,std_psnr,R".
std::string encode_bench_csv(const std::vector<BenchRow>& rows);
void write_bench_csv(const std::vector<BenchRow>& rows, const std::string& path);

}  // namespace nlem

#endif  // NLEM_CSV_HPP
