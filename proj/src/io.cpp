#include "vprfuse/io.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cstring>
#include <fstream>
#include <iterator>
#include <sstream>

#include "vprfuse/error.hpp"

namespace vprfuse {

namespace {

void put_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
  for (int shift = 0; shift < 32; shift += 8) out.push_back(static_cast<std::uint8_t>(v >> shift));
}

std::uint32_t get_u32(const std::uint8_t* p) {
  return std::uint32_t{p[0]} | (std::uint32_t{p[1]} << 8) | (std::uint32_t{p[2]} << 16) | (std::uint32_t{p[3]} << 24);
}

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

std::size_t parse_size(const std::string& text, const std::string& what) {
  std::size_t value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end) throw FormatError("invalid " + what + ": '" + text + "'");
  return value;
}

std::filesystem::path resolve(const std::filesystem::path& base, const std::string& p) {
  std::filesystem::path path(p);
  return path.is_absolute() ? path : base / path;
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

std::vector<std::uint8_t> encode_descriptors(const DescriptorMatrix& descriptors) {
  if (descriptors.rows() > UINT32_MAX || descriptors.dim() > UINT32_MAX) {
    throw ValidationError("descriptor block too large for the file format");
  }
  std::vector<std::uint8_t> out;
  out.reserve(kDescriptorHeaderBytes + descriptors.values().size() * 4);
  out.insert(out.end(), std::begin(kDescriptorMagic), std::end(kDescriptorMagic));
  put_u32(out, kDescriptorVersion);
  put_u32(out, static_cast<std::uint32_t>(descriptors.rows()));
  put_u32(out, static_cast<std::uint32_t>(descriptors.dim()));
  for (float v : descriptors.values()) put_u32(out, std::bit_cast<std::uint32_t>(v));
  return out;
}

DescriptorMatrix decode_descriptors(const std::vector<std::uint8_t>& bytes) {
  if (bytes.size() < 4 || std::memcmp(bytes.data(), kDescriptorMagic, 4) != 0) {
    throw FormatError("not a descriptor file (bad magic)");
  }
  if (bytes.size() < kDescriptorHeaderBytes) throw CorruptionError("descriptor file header truncated");
  const std::uint32_t version = get_u32(bytes.data() + 4);
  if (version != kDescriptorVersion) throw FormatError("unsupported descriptor file version " + std::to_string(version));
  const std::size_t rows = get_u32(bytes.data() + 8);
  const std::size_t dim = get_u32(bytes.data() + 12);
  const std::size_t count = rows * dim;
  const std::size_t payload = bytes.size() - kDescriptorHeaderBytes;
  if (payload < count * 4) {
    throw CorruptionError("descriptor payload truncated: expected " + std::to_string(count * 4) + " bytes, found " +
                          std::to_string(payload));
  }
  if (payload > count * 4) throw CorruptionError("trailing bytes after descriptor payload");
  std::vector<float> values(count);
  const std::uint8_t* p = bytes.data() + kDescriptorHeaderBytes;
  for (std::size_t k = 0; k < count; ++k, p += 4) values[k] = std::bit_cast<float>(get_u32(p));
  DescriptorMatrix out(rows, dim, std::move(values));
  out.validate_finite();
  return out;
}

DescriptorMatrix read_descriptor_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  try {
    return decode_descriptors(bytes);
  } catch (const Error& e) {
    // Rethrow with the file name, keeping the category.
    const std::string msg = path.string() + ": " + e.what();
    if (dynamic_cast<const FormatError*>(&e)) throw FormatError(msg);
    if (dynamic_cast<const CorruptionError*>(&e)) throw CorruptionError(msg);
    if (dynamic_cast<const ValidationError*>(&e)) throw ValidationError(msg);
    throw;
  }
}

void write_descriptor_file(const std::filesystem::path& path, const DescriptorMatrix& descriptors) {
  if (descriptors.empty()) throw ValidationError("refusing to write an empty descriptor file");
  descriptors.validate_finite();
  const auto bytes = encode_descriptors(descriptors);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw IoError("write failed for " + path.string());
}

GroundTruth GroundTruth::identity(std::size_t queries, std::size_t tolerance) {
  GroundTruth gt;
  gt.tolerance = tolerance;
  gt.true_place.resize(queries);
  for (std::size_t j = 0; j < queries; ++j) gt.true_place[j] = j;
  return gt;
}

GroundTruth read_ground_truth(const std::filesystem::path& path, std::size_t tolerance) {
  std::istringstream in(read_text(path));
  std::string line;
  if (!std::getline(in, line) || trim(line) != "query_index,place_index") {
    throw FormatError(path.string() + ": expected header 'query_index,place_index'");
  }
  std::vector<std::pair<std::size_t, std::size_t>> rows;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string t = trim(line);
    if (t.empty()) continue;
    const auto comma = t.find(',');
    if (comma == std::string::npos) throw FormatError(path.string() + ":" + std::to_string(line_no) + ": missing comma");
    rows.emplace_back(parse_size(trim(t.substr(0, comma)), "query index"),
                      parse_size(trim(t.substr(comma + 1)), "place index"));
  }
  GroundTruth gt;
  gt.tolerance = tolerance;
  gt.true_place.assign(rows.size(), 0);
  std::vector<bool> seen(rows.size(), false);
  for (const auto& [q, p] : rows) {
    if (q >= rows.size() || seen[q]) {
      throw ValidationError(path.string() + ": query indices must cover 0..T-1 exactly once (bad index " +
                            std::to_string(q) + ")");
    }
    seen[q] = true;
    gt.true_place[q] = p;
  }
  return gt;
}

void write_ground_truth(const std::filesystem::path& path, const GroundTruth& gt) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  out << "query_index,place_index\n";
  for (std::size_t j = 0; j < gt.true_place.size(); ++j) out << j << ',' << gt.true_place[j] << '\n';
  if (!out) throw IoError("write failed for " + path.string());
}

DatasetManifest parse_manifest(const std::string& text, const std::filesystem::path& base_dir) {
  DatasetManifest m;
  bool have_places = false, have_dim = false, have_query = false;
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos) throw FormatError("manifest line " + std::to_string(line_no) + ": expected key = value");
    const std::string key = trim(t.substr(0, eq));
    const std::string value = trim(t.substr(eq + 1));
    if (key == "places") {
      m.places = parse_size(value, "places");
      have_places = true;
    } else if (key == "dim") {
      m.dim = parse_size(value, "dim");
      have_dim = true;
    } else if (key == "query") {
      m.query = resolve(base_dir, value);
      have_query = true;
    } else if (key == "gt_tolerance") {
      m.gt_tolerance = parse_size(value, "gt_tolerance");
    } else if (key == "ground_truth") {
      m.ground_truth = resolve(base_dir, value);
    } else if (key == "ref") {
      const auto comma = value.find(',');
      if (comma == std::string::npos) throw FormatError("manifest line " + std::to_string(line_no) + ": ref needs label,path");
      m.references.push_back({trim(value.substr(0, comma)), resolve(base_dir, trim(value.substr(comma + 1)))});
    } else {
      throw FormatError("manifest line " + std::to_string(line_no) + ": unknown key '" + key + "'");
    }
  }
  if (!have_places || !have_dim || !have_query) throw FormatError("manifest must define places, dim and query");
  if (m.places == 0 || m.dim == 0) throw ValidationError("manifest places and dim must be positive");
  if (m.references.empty()) throw FormatError("manifest lists no reference sets");
  return m;
}

DatasetManifest read_manifest(const std::filesystem::path& path) {
  return parse_manifest(read_text(path), path.parent_path());
}

void write_manifest(const std::filesystem::path& path, const DatasetManifest& manifest) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  const auto base = path.parent_path();
  auto rel = [&](const std::filesystem::path& p) { return p.lexically_relative(base).generic_string(); };
  out << "# vprfuse dataset manifest\n";
  out << "places = " << manifest.places << '\n';
  out << "dim = " << manifest.dim << '\n';
  out << "query = " << rel(manifest.query) << '\n';
  out << "gt_tolerance = " << manifest.gt_tolerance << '\n';
  if (manifest.ground_truth) out << "ground_truth = " << rel(*manifest.ground_truth) << '\n';
  for (const auto& r : manifest.references) out << "ref = " << r.label << ',' << rel(r.path) << '\n';
  if (!out) throw IoError("write failed for " + path.string());
}

void validate_dataset(const Dataset& dataset, std::size_t places, std::size_t dim) {
  if (dataset.references.empty()) throw ValidationError("dataset has no reference sets");
  for (const auto& ref : dataset.references) {
    if (ref.places() != places || ref.dim() != dim) {
      throw ValidationError("reference set '" + ref.label + "' is " + std::to_string(ref.places()) + "x" +
                            std::to_string(ref.dim()) + ", manifest declares " + std::to_string(places) + "x" +
                            std::to_string(dim));
    }
  }
  if (dataset.queries.dim() != dim) {
    throw ValidationError("query dimension " + std::to_string(dataset.queries.dim()) + " does not match manifest dim " +
                          std::to_string(dim));
  }
  if (dataset.ground_truth.queries() != dataset.queries.rows()) {
    throw ValidationError("ground truth covers " + std::to_string(dataset.ground_truth.queries()) + " queries, query file has " +
                          std::to_string(dataset.queries.rows()));
  }
  for (std::size_t p : dataset.ground_truth.true_place) {
    if (p >= places) throw ValidationError("ground truth place " + std::to_string(p) + " out of range");
  }
}

Dataset load_dataset(const DatasetManifest& manifest) {
  for (const auto& r : manifest.references) {
    if (!std::filesystem::exists(r.path)) throw ValidationError("reference file missing: " + r.path.string());
  }
  if (!std::filesystem::exists(manifest.query)) throw ValidationError("query file missing: " + manifest.query.string());

  Dataset ds;
  // Header check for every file before pulling any payload.
  for (const auto& r : manifest.references) {
    std::ifstream in(r.path, std::ios::binary);
    std::vector<std::uint8_t> head(kDescriptorHeaderBytes);
    in.read(reinterpret_cast<char*>(head.data()), static_cast<std::streamsize>(head.size()));
    if (in.gcount() == static_cast<std::streamsize>(kDescriptorHeaderBytes) && std::memcmp(head.data(), kDescriptorMagic, 4) == 0) {
      const std::size_t rows = get_u32(head.data() + 8), dim = get_u32(head.data() + 12);
      if (rows != manifest.places || dim != manifest.dim) {
        throw ValidationError("reference file " + r.path.string() + " declares " + std::to_string(rows) + "x" +
                              std::to_string(dim) + ", manifest declares " + std::to_string(manifest.places) + "x" +
                              std::to_string(manifest.dim));
      }
    }
  }
  for (std::size_t u = 0; u < manifest.references.size(); ++u) {
    ReferenceSet ref;
    ref.id = u;
    ref.label = manifest.references[u].label;
    ref.descriptors = read_descriptor_file(manifest.references[u].path);
    ds.references.push_back(std::move(ref));
  }
  ds.queries = read_descriptor_file(manifest.query);
  ds.ground_truth = manifest.ground_truth ? read_ground_truth(*manifest.ground_truth, manifest.gt_tolerance)
                                          : GroundTruth::identity(ds.queries.rows(), manifest.gt_tolerance);
  validate_dataset(ds, manifest.places, manifest.dim);
  return ds;
}

Dataset load_dataset(const std::filesystem::path& manifest_path) { return load_dataset(read_manifest(manifest_path)); }

}  // namespace vprfuse
