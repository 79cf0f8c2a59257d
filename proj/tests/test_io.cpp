#include <gtest/gtest.h>

#include <bit>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>

#include "vprfuse/error.hpp"
#include "vprfuse/io.hpp"

namespace fs = std::filesystem;
using namespace vprfuse;

namespace {

class TempDir : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("vprfuse_io_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  fs::path dir_;
};

void write_bytes(const fs::path& p, const std::vector<std::uint8_t>& bytes) {
  std::ofstream f(p, std::ios::binary);
  f.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
}

std::vector<std::uint8_t> read_bytes(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

}  // namespace

using DescriptorFile = TempDir;

TEST_F(DescriptorFile, SmallRoundTrip) {
  const auto m = DescriptorMatrix::from_rows({{1, 2, 3}, {4, 5, 6}});
  write_descriptor_file(dir_ / "a.vprd", m);
  const auto back = read_descriptor_file(dir_ / "a.vprd");
  EXPECT_EQ(back.rows(), 2u);
  EXPECT_EQ(back.dim(), 3u);
  EXPECT_EQ(back, m);
}

TEST_F(DescriptorFile, HeaderLayoutIsLittleEndian) {
  const auto m = DescriptorMatrix::from_rows({{-1.5f, 3.25f}});
  write_descriptor_file(dir_ / "h.vprd", m);
  const auto bytes = read_bytes(dir_ / "h.vprd");
  ASSERT_EQ(bytes.size(), 16u + 8u);
  const std::vector<std::uint8_t> header = {0x56, 0x50, 0x52, 0x44, 1, 0, 0, 0, 1, 0, 0, 0, 2, 0, 0, 0};
  EXPECT_TRUE(std::equal(header.begin(), header.end(), bytes.begin()));
  // -1.5f = 0xBFC00000
  EXPECT_EQ(bytes[16], 0x00);
  EXPECT_EQ(bytes[19], 0xBF);
  EXPECT_EQ(bytes[18], 0xC0);
  const auto back = read_descriptor_file(dir_ / "h.vprd");
  EXPECT_EQ(back.row(0)[0], -1.5f);
  EXPECT_EQ(back.row(0)[1], 3.25f);
}

TEST_F(DescriptorFile, SingleZeroVector) {
  const DescriptorMatrix zero(1, 5);
  write_descriptor_file(dir_ / "z.vprd", zero);
  const auto back = read_descriptor_file(dir_ / "z.vprd");
  ASSERT_EQ(back.rows(), 1u);
  for (float v : back.row(0)) EXPECT_EQ(v, 0.0f);
}

TEST_F(DescriptorFile, BadMagicIsFormatError) {
  auto bytes = encode_descriptors(DescriptorMatrix::from_rows({{1, 2}}));
  bytes[0] = 'X', bytes[1] = 'X', bytes[2] = 'X', bytes[3] = 'X';
  write_bytes(dir_ / "bad.vprd", bytes);
  EXPECT_THROW(read_descriptor_file(dir_ / "bad.vprd"), FormatError);
}

TEST_F(DescriptorFile, BadVersionIsFormatError) {
  auto bytes = encode_descriptors(DescriptorMatrix::from_rows({{1, 2}}));
  bytes[4] = 2;
  EXPECT_THROW(decode_descriptors(bytes), FormatError);
}

TEST_F(DescriptorFile, TruncatedPayloadIsCorruption) {
  auto bytes = encode_descriptors(DescriptorMatrix::from_rows({{1, 2}, {3, 4}}));
  bytes.resize(bytes.size() - 3);
  write_bytes(dir_ / "t.vprd", bytes);
  EXPECT_THROW(read_descriptor_file(dir_ / "t.vprd"), CorruptionError);
  bytes.resize(10);
  EXPECT_THROW(decode_descriptors(bytes), CorruptionError);
}

TEST_F(DescriptorFile, NonFiniteIsValidationError) {
  auto bytes = encode_descriptors(DescriptorMatrix::from_rows({{1, 2}}));
  const auto nan = std::bit_cast<std::uint32_t>(std::numeric_limits<float>::quiet_NaN());
  for (int b = 0; b < 4; ++b) bytes[16 + b] = static_cast<std::uint8_t>(nan >> (8 * b));
  EXPECT_THROW(decode_descriptors(bytes), ValidationError);
  EXPECT_THROW(write_descriptor_file(dir_ / "n.vprd", DescriptorMatrix::from_rows({{INFINITY}})), ValidationError);
}

TEST_F(DescriptorFile, WriteRejectsEmptyAndRagged) {
  EXPECT_THROW(write_descriptor_file(dir_ / "e.vprd", DescriptorMatrix{}), ValidationError);
  EXPECT_THROW(DescriptorMatrix::from_rows({{1, 2}, {3}}), DimensionMismatch);
}

TEST_F(DescriptorFile, MissingFileIsIoError) { EXPECT_THROW(read_descriptor_file(dir_ / "nope.vprd"), IoError); }

// Property: random finite payloads survive write/read bit for bit.
TEST_F(DescriptorFile, RandomPayloadsRoundTripBitwise) {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<std::uint32_t> bits;
  std::uniform_int_distribution<std::size_t> size(1, 40);
  for (int rep = 0; rep < 100; ++rep) {
    const std::size_t rows = size(rng), dim = size(rng);
    DescriptorMatrix m(rows, dim);
    for (auto& v : m.values()) {
      float f;
      do f = std::bit_cast<float>(bits(rng));
      while (!std::isfinite(f));
      v = f;
    }
    write_descriptor_file(dir_ / "r.vprd", m);
    const auto back = read_descriptor_file(dir_ / "r.vprd");
    ASSERT_EQ(back.rows(), rows);
    ASSERT_EQ(back.dim(), dim);
    for (std::size_t k = 0; k < m.values().size(); ++k) {
      ASSERT_EQ(std::bit_cast<std::uint32_t>(back.values()[k]), std::bit_cast<std::uint32_t>(m.values()[k]));
    }
  }
}

TEST_F(DescriptorFile, TenThousandRows) {
  std::mt19937_64 rng(5);
  std::normal_distribution<float> g;
  DescriptorMatrix m(10000, 8);
  for (auto& v : m.values()) v = g(rng);
  write_descriptor_file(dir_ / "big.vprd", m);
  const auto bytes = read_bytes(dir_ / "big.vprd");
  EXPECT_EQ(bytes.size(), 16u + 10000u * 8u * 4u);
  EXPECT_EQ(read_descriptor_file(dir_ / "big.vprd"), m);
}

using GroundTruthFile = TempDir;

TEST_F(GroundTruthFile, RoundTripAndValidation) {
  GroundTruth gt;
  gt.true_place = {3, 0, 2};
  gt.tolerance = 2;
  write_ground_truth(dir_ / "gt.csv", gt);
  const auto back = read_ground_truth(dir_ / "gt.csv", 2);
  EXPECT_EQ(back.true_place, gt.true_place);

  std::ofstream(dir_ / "dup.csv") << "query_index,place_index\n0,1\n0,2\n";
  EXPECT_THROW(read_ground_truth(dir_ / "dup.csv", 0), ValidationError);
  std::ofstream(dir_ / "hdr.csv") << "q,p\n0,1\n";
  EXPECT_THROW(read_ground_truth(dir_ / "hdr.csv", 0), FormatError);
}

using Manifest = TempDir;

TEST_F(Manifest, ParsesKeysCommentsAndRelativePaths) {
  const auto m = parse_manifest(
      "# comment\nplaces = 4\ndim=2\nquery = q.vprd\ngt_tolerance = 2\nref = winter, w.vprd\nref = summer,/abs/s.vprd\n",
      dir_);
  EXPECT_EQ(m.places, 4u);
  EXPECT_EQ(m.dim, 2u);
  EXPECT_EQ(m.query, dir_ / "q.vprd");
  EXPECT_EQ(m.gt_tolerance, 2u);
  ASSERT_EQ(m.references.size(), 2u);
  EXPECT_EQ(m.references[0].label, "winter");
  EXPECT_EQ(m.references[0].path, dir_ / "w.vprd");
  EXPECT_EQ(m.references[1].path, fs::path("/abs/s.vprd"));
  EXPECT_FALSE(m.ground_truth.has_value());
}

TEST_F(Manifest, RejectsMalformed) {
  EXPECT_THROW(parse_manifest("places = 4\nquery = q\nref = a,b\n", dir_), FormatError);  // no dim
  EXPECT_THROW(parse_manifest("places = x\ndim = 2\nquery = q\nref = a,b\n", dir_), FormatError);
  EXPECT_THROW(parse_manifest("places = 4\ndim = 2\nquery = q\ncolour = red\nref = a,b\n", dir_), FormatError);
  EXPECT_THROW(parse_manifest("places = 4\ndim = 2\nquery = q\n", dir_), FormatError);
}

TEST_F(Manifest, LoadRejectsInconsistentSizesBeforeReadingPayload) {
  write_descriptor_file(dir_ / "a.vprd", DescriptorMatrix(3, 2));
  write_descriptor_file(dir_ / "b.vprd", DescriptorMatrix(4, 2));
  write_descriptor_file(dir_ / "q.vprd", DescriptorMatrix(3, 2));
  std::ofstream(dir_ / "m.txt") << "places = 3\ndim = 2\nquery = q.vprd\nref = a,a.vprd\nref = b,b.vprd\n";
  EXPECT_THROW(load_dataset(dir_ / "m.txt"), ValidationError);

  std::ofstream(dir_ / "m2.txt") << "places = 3\ndim = 3\nquery = q.vprd\nref = a,a.vprd\n";
  EXPECT_THROW(load_dataset(dir_ / "m2.txt"), ValidationError);

  std::ofstream(dir_ / "m3.txt") << "places = 3\ndim = 2\nquery = q.vprd\nref = a,missing.vprd\n";
  EXPECT_THROW(load_dataset(dir_ / "m3.txt"), ValidationError);
}

TEST_F(Manifest, WriteThenLoad) {
  write_descriptor_file(dir_ / "a.vprd", DescriptorMatrix::from_rows({{0, 1}, {1, 0}}));
  write_descriptor_file(dir_ / "q.vprd", DescriptorMatrix::from_rows({{0, 1}}));
  DatasetManifest m;
  m.places = 2;
  m.dim = 2;
  m.query = dir_ / "q.vprd";
  m.gt_tolerance = 1;
  m.references = {{"day", dir_ / "a.vprd"}};
  write_manifest(dir_ / "m.txt", m);
  const auto ds = load_dataset(dir_ / "m.txt");
  EXPECT_EQ(ds.places(), 2u);
  EXPECT_EQ(ds.references[0].label, "day");
  EXPECT_EQ(ds.ground_truth.true_place, std::vector<std::size_t>{0});
  EXPECT_EQ(ds.ground_truth.tolerance, 1u);
}
