#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace polarity {

// Data problems (bad files, malformed records, mismatched artifacts).
// The CLI maps these to exit code 2.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct FeatureValue {
  enum class Type { Numeric, Category, Boolean, Missing };
  Type type = Type::Missing;
  double number = 0.0;
  std::string category;
  bool flag = false;

  static FeatureValue numeric(double v) { return {Type::Numeric, v, {}, false}; }
  static FeatureValue cat(std::string v) { return {Type::Category, 0, std::move(v), false}; }
  static FeatureValue boolean(bool v) { return {Type::Boolean, 0, {}, v}; }
  static FeatureValue missing() { return {}; }

  bool is_missing() const { return type == Type::Missing; }
  bool operator==(const FeatureValue&) const = default;
};

struct PropertyRecord {
  std::string id;
  double price = 0.0;   // > 0
  double area = 0.0;    // m^2, > 0
  int64_t publish_day = 0;  // days since 1970-01-01
  std::string neighbourhood;
  std::string age;      // opaque category string
  std::string property_type;
  std::string description;
  std::map<std::string, FeatureValue> features;

  double price_per_area() const { return price / area; }
  bool operator==(const PropertyRecord&) const = default;
};

enum class SchemaMode { Strict, Lenient };

struct Rejection {
  size_t line_no = 0;
  std::string reason;
};

struct ParseResult {
  std::vector<PropertyRecord> records;
  std::vector<Rejection> rejections;
  std::vector<std::string> warnings;
};

// One JSON object per line; see README for the schema. In Strict mode the
// first malformed line throws DataError; in Lenient mode bad lines land in
// `rejections` and parsing continues.
ParseResult parse_records(const std::string& path, SchemaMode mode);
ParseResult parse_records_text(std::string_view jsonl, SchemaMode mode);

void serialize_records(const std::vector<PropertyRecord>& records,
                       const std::string& path);
std::string serialize_record_line(const PropertyRecord& rec);

enum class FeatureKind { Numeric, Categorical, Boolean };

struct FeatureSpec {
  std::string name;
  FeatureKind kind = FeatureKind::Numeric;
  std::vector<std::string> categories;  // lexicographic, Categorical only

  size_t width() const {
    return kind == FeatureKind::Categorical ? categories.size() : 1;
  }
};

struct FeatureSchema {
  std::vector<FeatureSpec> features;  // lexicographic by name

  size_t encoded_width() const;
  // [begin, end) column range of each feature in encoding order
  std::vector<std::pair<size_t, size_t>> column_ranges() const;
  uint64_t fingerprint() const;
  std::string canonical_string() const;
};

struct BuildSchemaResult {
  FeatureSchema schema;
  std::vector<std::string> warnings;
};

// Union of all feature names; kind per feature from its observed values,
// falling back to Categorical (with a warning) when kinds contradict.
BuildSchemaResult build_schema(const std::vector<PropertyRecord>& records);

struct EncodedMatrix {
  size_t n_rows = 0;
  size_t n_cols = 0;
  std::vector<double> values;        // row-major
  std::vector<uint8_t> missing_mask;  // parallel to values

  double at(size_t r, size_t c) const { return values[r * n_cols + c]; }
  bool missing(size_t r, size_t c) const { return missing_mask[r * n_cols + c] != 0; }
};

// Numeric copied, booleans 0/1, categoricals one-hot. A Missing value (or an
// absent feature, or a category outside the schema vocabulary) marks every
// column of that feature missing.
EncodedMatrix encode_features(const FeatureSchema& schema,
                              const std::vector<PropertyRecord>& records,
                              std::vector<std::string>* warnings = nullptr);

// Canonical category key for non-Category values landing in a Categorical
// feature (schema building and encoding must agree on it).
std::string category_key(const FeatureValue& v);

struct TrainTestSplit {
  std::vector<size_t> train;  // ascending
  std::vector<size_t> test;   // ascending
};

// |train| = round-half-up(n * train_fraction); deterministic in (n, fraction,
// seed). Throws std::invalid_argument on n < 2 or fraction outside (0, 1).
TrainTestSplit split_train_test(size_t n, double train_fraction, uint64_t seed);

}  // namespace polarity
