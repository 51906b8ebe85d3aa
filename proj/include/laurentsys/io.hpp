#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

#include "laurentsys/field.hpp"
#include "laurentsys/sequence.hpp"
#include "laurentsys/system.hpp"

namespace laurentsys {

// Sparse CSV: one row per nonzero coefficient, `a_1,...,a_r,value`, no
// header. Rows are written in ascending lexicographic index order.
// Readers throw RankMismatch (wrong column count), BadValueToken,
// DuplicateIndex, DecimalInExactField, ZeroDenominator; messages name the line.
FiniteSeq parse_seq_csv(std::string_view text, std::size_t rank, const Field& field);
std::string format_seq_csv(const FiniteSeq& w);
FiniteSeq read_seq_csv(const std::filesystem::path& path, std::size_t rank, const Field& field);
void write_seq_csv(const std::filesystem::path& path, const FiniteSeq& w);

/// Binary PGM (P5). Pixel (row y, column x) is the coefficient at index
/// (x, y) with value gray / maxval, so `pixels` is a rank-2 float signal.
struct PgmImage {
  std::size_t width = 0;
  std::size_t height = 0;
  std::uint32_t maxval = 255;
  FiniteSeq pixels;
};

/// Throws BadMagic (wrong magic or malformed header), TruncatedPixelData,
/// InvalidField (field is not a float field).
PgmImage decode_pgm(std::string_view bytes, const Field& field = Field::real());
/// Values outside the width x height frame are dropped; the rest are clamped
/// to [0, 1] and quantised as floor(v * maxval + 1/2).
std::string encode_pgm(const PgmImage& image);
PgmImage read_pgm(const std::filesystem::path& path, const Field& field = Field::real());
void write_pgm(const std::filesystem::path& path, const PgmImage& image);

/// Periodic signal document {"rank", "field", "periods", "values"}. `values`
/// is the row-major fundamental domain of a single signal, or a list of
/// such lists for a vector signal. Values may be JSON numbers or value
/// tokens such as "1/2". Throws SchemaError plus value-token errors.
SeqVector parse_periodic(std::string_view json_text);
std::string format_periodic(const SeqVector& w);
SeqVector read_periodic(const std::filesystem::path& path);
void write_periodic(const std::filesystem::path& path, const SeqVector& w);

/// Kernel report {"rank", "field", "periods", "components", "dimension",
/// "basis"}; each basis entry is the stacked coordinate list.
std::string format_kernel_report(const KernelBasis& k);
KernelBasis parse_kernel_report(std::string_view json_text);
void write_kernel_report(const KernelBasis& k, const std::filesystem::path& path);
KernelBasis read_kernel_report(const std::filesystem::path& path);

/// Whole-file helpers; throw IoError.
std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view contents);

}  // namespace laurentsys
