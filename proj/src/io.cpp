#include "laurentsys/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iterator>
#include <set>
#include <sstream>
#include <system_error>
#include <vector>

#include <json.hpp>

#include "laurentsys/error.hpp"

namespace laurentsys {

namespace {

using ordered_json = nlohmann::ordered_json;
using json = nlohmann::json;

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t next = s.find(sep, start);
    parts.push_back(s.substr(start, next == std::string_view::npos ? std::string_view::npos : next - start));
    if (next == std::string_view::npos) break;
    start = next + 1;
  }
  return parts;
}

json parse_json(std::string_view text, const char* what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError(std::string(what) + " is not valid JSON: " + e.what());
  }
}

Field field_member(const json& doc) {
  if (!doc.contains("field") || !doc["field"].is_string()) throw SchemaError("'field' must be a string");
  try {
    return Field::parse(doc["field"].get<std::string>());
  } catch (const InvalidField& e) {
    throw SchemaError(std::string("'field': ") + e.what());
  }
}

std::size_t positive_member(const json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_number_unsigned() || doc[key].get<std::uint64_t>() == 0) {
    throw SchemaError(std::string("'") + key + "' must be a positive integer");
  }
  return doc[key].get<std::size_t>();
}

std::vector<std::int64_t> periods_member(const json& doc, std::size_t rank) {
  if (!doc.contains("periods") || !doc["periods"].is_array() || doc["periods"].size() != rank) {
    throw SchemaError("'periods' must be an array of rank = " + std::to_string(rank) + " integers");
  }
  std::vector<std::int64_t> periods;
  for (const auto& p : doc["periods"]) {
    if (!p.is_number_integer() || p.get<std::int64_t>() < 1) throw SchemaError("periods must be integers >= 1");
    periods.push_back(p.get<std::int64_t>());
  }
  return periods;
}

FieldValue json_value(const json& v, const Field& field) {
  if (v.is_string()) return field.parse_value(v.get<std::string>());
  if (v.is_number_integer()) return field.from_int(v.get<std::int64_t>());
  if (v.is_number_float()) return field.from_double(v.get<double>());
  throw SchemaError("values must be numbers or value strings");
}

std::vector<FieldValue> json_values(const json& list, const Field& field, std::size_t expected) {
  if (!list.is_array() || list.size() != expected) {
    throw SchemaError("expected a list of " + std::to_string(expected) + " values");
  }
  std::vector<FieldValue> out;
  out.reserve(expected);
  for (const auto& v : list) out.push_back(json_value(v, field));
  return out;
}

ordered_json string_list(const std::vector<FieldValue>& values) {
  auto out = ordered_json::array();
  for (const auto& v : values) out.push_back(v.to_string());
  return out;
}

}  // namespace

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  std::string contents((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) throw IoError("error reading '" + path.string() + "'");
  return contents;
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw IoError("error writing '" + path.string() + "'");
}

// ------------------------------------------------------------------ CSV

FiniteSeq parse_seq_csv(std::string_view text, std::size_t rank, const Field& field) {
  FiniteSeq w(rank, field);
  std::set<Exponent> seen;
  std::size_t line_no = 0;
  for (std::string_view line : split(text, '\n')) {
    ++line_no;
    line = trim(line);
    if (line.empty()) continue;
    const std::string where = "line " + std::to_string(line_no);
    const auto cells = split(line, ',');
    if (cells.size() != rank + 1) {
      throw RankMismatch(where + ": expected " + std::to_string(rank + 1) + " columns, got " +
                         std::to_string(cells.size()));
    }
    Exponent alpha = Exponent::zero(rank);
    for (std::size_t i = 0; i < rank; ++i) {
      const std::string_view cell = trim(cells[i]);
      auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), alpha[i]);
      if (cell.empty() || ec != std::errc{} || ptr != cell.data() + cell.size()) {
        throw BadValueToken(where + ": bad index '" + std::string(cell) + "'");
      }
    }
    if (!seen.insert(alpha).second) throw DuplicateIndex(where + ": duplicate index " + alpha.to_string());
    try {
      w.add_term(alpha, field.parse_value(trim(cells[rank])));
    } catch (const Error& e) {
      e.rethrow_with_context(where);
    }
  }
  return w;
}

std::string format_seq_csv(const FiniteSeq& w) {
  std::string out;
  for (const auto& [alpha, value] : w) {
    for (std::size_t i = 0; i < alpha.rank(); ++i) out += std::to_string(alpha[i]) + ',';
    out += value.to_string();
    out += '\n';
  }
  return out;
}

FiniteSeq read_seq_csv(const std::filesystem::path& path, std::size_t rank, const Field& field) {
  try {
    return parse_seq_csv(read_file(path), rank, field);
  } catch (const IoError&) {
    throw;
  } catch (const Error& e) {
    e.rethrow_with_context(path.string());
  }
}

void write_seq_csv(const std::filesystem::path& path, const FiniteSeq& w) { write_file(path, format_seq_csv(w)); }

// ------------------------------------------------------------------ PGM

PgmImage decode_pgm(std::string_view bytes, const Field& field) {
  if (field.is_exact()) throw InvalidField("PGM pixels need a float field, got " + field.to_string());
  if (bytes.size() < 2 || bytes[0] != 'P' || bytes[1] != '5') throw BadMagic("not a binary PGM (expected 'P5')");
  std::size_t pos = 2;
  auto header_number = [&](const char* what) -> std::uint64_t {
    // whitespace and '#' comments may precede each header field
    while (pos < bytes.size()) {
      const char c = bytes[pos];
      if (c == '#') {
        while (pos < bytes.size() && bytes[pos] != '\n') ++pos;
      } else if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f') {
        ++pos;
      } else {
        break;
      }
    }
    const std::size_t start = pos;
    while (pos < bytes.size() && bytes[pos] >= '0' && bytes[pos] <= '9') ++pos;
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(bytes.data() + start, bytes.data() + pos, value);
    if (pos == start || ec != std::errc{}) throw BadMagic(std::string("malformed PGM header: bad ") + what);
    return value;
  };
  const std::uint64_t width = header_number("width");
  const std::uint64_t height = header_number("height");
  const std::uint64_t maxval = header_number("maxval");
  if (width == 0 || height == 0 || width > (1U << 20) || height > (1U << 20)) {
    throw BadMagic("malformed PGM header: unsupported size");
  }
  if (maxval == 0 || maxval > 65535) throw BadMagic("malformed PGM header: maxval must be in 1..65535");
  if (pos >= bytes.size() || !(bytes[pos] == ' ' || bytes[pos] == '\t' || bytes[pos] == '\n' || bytes[pos] == '\r')) {
    throw BadMagic("malformed PGM header: missing whitespace after maxval");
  }
  ++pos;
  const std::size_t sample = maxval < 256 ? 1 : 2;
  const std::size_t needed = static_cast<std::size_t>(width * height) * sample;
  if (bytes.size() - pos < needed) {
    throw TruncatedPixelData("expected " + std::to_string(needed) + " bytes of pixel data, got " +
                             std::to_string(bytes.size() - pos));
  }
  PgmImage image{static_cast<std::size_t>(width), static_cast<std::size_t>(height),
                 static_cast<std::uint32_t>(maxval), FiniteSeq(2, field)};
  const auto* data = reinterpret_cast<const unsigned char*>(bytes.data() + pos);
  for (std::size_t y = 0; y < image.height; ++y) {
    for (std::size_t x = 0; x < image.width; ++x) {
      const std::size_t k = (y * image.width + x) * sample;
      const unsigned gray = sample == 1 ? data[k] : (static_cast<unsigned>(data[k]) << 8U) | data[k + 1];
      if (gray == 0) continue;
      image.pixels.add_term(Exponent{static_cast<std::int64_t>(x), static_cast<std::int64_t>(y)},
                            field.from_double(static_cast<double>(gray) / static_cast<double>(maxval)));
    }
  }
  return image;
}

std::string encode_pgm(const PgmImage& image) {
  if (image.pixels.rank() != 2) throw RankMismatch("PGM images hold rank-2 signals");
  if (image.maxval == 0 || image.maxval > 65535) throw BadMagic("maxval must be in 1..65535");
  std::string out = "P5\n" + std::to_string(image.width) + " " + std::to_string(image.height) + "\n" +
                    std::to_string(image.maxval) + "\n";
  const std::size_t sample = image.maxval < 256 ? 1 : 2;
  const std::size_t header = out.size();
  out.resize(header + image.width * image.height * sample, '\0');
  for (const auto& [alpha, value] : image.pixels) {
    if (alpha[0] < 0 || alpha[1] < 0 || static_cast<std::size_t>(alpha[0]) >= image.width ||
        static_cast<std::size_t>(alpha[1]) >= image.height) {
      continue;
    }
    const double v = std::clamp(value.to_double(), 0.0, 1.0);
    const auto gray = static_cast<unsigned>(std::floor(v * image.maxval + 0.5));
    const std::size_t k =
        header + (static_cast<std::size_t>(alpha[1]) * image.width + static_cast<std::size_t>(alpha[0])) * sample;
    if (sample == 1) {
      out[k] = static_cast<char>(gray);
    } else {
      out[k] = static_cast<char>(gray >> 8U);
      out[k + 1] = static_cast<char>(gray & 0xFFU);
    }
  }
  return out;
}

PgmImage read_pgm(const std::filesystem::path& path, const Field& field) {
  return decode_pgm(read_file(path), field);
}

void write_pgm(const std::filesystem::path& path, const PgmImage& image) { write_file(path, encode_pgm(image)); }

// ------------------------------------------------------------- periodic

SeqVector parse_periodic(std::string_view json_text) {
  const json doc = parse_json(json_text, "periodic document");
  if (!doc.is_object()) throw SchemaError("periodic document must be a JSON object");
  const std::size_t rank = positive_member(doc, "rank");
  const Field field = field_member(doc);
  const std::vector<std::int64_t> periods = periods_member(doc, rank);
  if (!doc.contains("values") || !doc["values"].is_array()) throw SchemaError("'values' must be an array");
  const json& values = doc["values"];
  const std::size_t d = domain_size(periods);
  std::vector<PeriodicSeq> components;
  if (!values.empty() && values.front().is_array()) {
    for (const auto& part : values) components.emplace_back(periods, json_values(part, field, d), field);
  } else {
    components.emplace_back(periods, json_values(values, field, d), field);
  }
  return SeqVector(std::move(components));
}

std::string format_periodic(const SeqVector& w) {
  const auto& components = w.periodic();
  ordered_json doc;
  doc["rank"] = w.rank();
  doc["field"] = w.field().to_string();
  doc["periods"] = components.front().periods();
  if (components.size() == 1) {
    doc["values"] = string_list(components.front().values());
  } else {
    auto nested = ordered_json::array();
    for (const auto& c : components) nested.push_back(string_list(c.values()));
    doc["values"] = std::move(nested);
  }
  return doc.dump(2) + "\n";
}

SeqVector read_periodic(const std::filesystem::path& path) { return parse_periodic(read_file(path)); }

void write_periodic(const std::filesystem::path& path, const SeqVector& w) { write_file(path, format_periodic(w)); }

// ------------------------------------------------------- kernel report

std::string format_kernel_report(const KernelBasis& k) {
  ordered_json doc;
  doc["rank"] = k.rank;
  doc["field"] = k.field.to_string();
  doc["periods"] = k.periods;
  doc["components"] = k.components;
  doc["dimension"] = k.dimension();
  auto basis = ordered_json::array();
  for (const auto& b : k.basis) basis.push_back(string_list(stack(b)));
  doc["basis"] = std::move(basis);
  return doc.dump(2) + "\n";
}

KernelBasis parse_kernel_report(std::string_view json_text) {
  const json doc = parse_json(json_text, "kernel report");
  if (!doc.is_object()) throw SchemaError("kernel report must be a JSON object");
  const std::size_t rank = positive_member(doc, "rank");
  const Field field = field_member(doc);
  std::vector<std::int64_t> periods = periods_member(doc, rank);
  const std::size_t components = positive_member(doc, "components");
  if (!doc.contains("dimension") || !doc["dimension"].is_number_unsigned()) {
    throw SchemaError("'dimension' must be a non-negative integer");
  }
  if (!doc.contains("basis") || !doc["basis"].is_array() ||
      doc["basis"].size() != doc["dimension"].get<std::size_t>()) {
    throw SchemaError("'basis' must list exactly 'dimension' vectors");
  }
  KernelBasis k{rank, field, periods, components, {}};
  const std::size_t stacked = components * domain_size(periods);
  for (const auto& entry : doc["basis"]) {
    k.basis.push_back(unstack(json_values(entry, field, stacked), components, periods, field));
  }
  return k;
}

void write_kernel_report(const KernelBasis& k, const std::filesystem::path& path) {
  write_file(path, format_kernel_report(k));
}

KernelBasis read_kernel_report(const std::filesystem::path& path) { return parse_kernel_report(read_file(path)); }

}  // namespace laurentsys
