#include "core/tensor.hpp"

#include <cmath>
#include <cstring>
#include <fstream>
#include <limits>

#include "core/error.hpp"

namespace df {

namespace {

constexpr char kMagic[4] = {'D', 'F', 'T', '1'};
constexpr uint32_t kMaxRank = 8;
constexpr uint64_t kMaxElements = uint64_t(1) << 30;

uint64_t element_count(const std::vector<uint32_t>& dims) {
  uint64_t n = 1;
  for (uint32_t d : dims) {
    n *= d;
    if (n > kMaxElements)
      fail(ErrorCode::Validation, "tensor exceeds element budget");
  }
  return n;
}

uint32_t load_u32le(const unsigned char* p) {
  return uint32_t(p[0]) | uint32_t(p[1]) << 8 | uint32_t(p[2]) << 16 |
         uint32_t(p[3]) << 24;
}

void store_u32le(uint32_t v, unsigned char* p) {
  p[0] = v & 0xff;
  p[1] = (v >> 8) & 0xff;
  p[2] = (v >> 16) & 0xff;
  p[3] = (v >> 24) & 0xff;
}

float load_f32le(const unsigned char* p) {
  uint32_t bits = load_u32le(p);
  float f;
  std::memcpy(&f, &bits, sizeof(f));
  return f;
}

void store_f32le(float f, unsigned char* p) {
  uint32_t bits;
  std::memcpy(&bits, &f, sizeof(bits));
  store_u32le(bits, p);
}

}  // namespace

Tensor Tensor::create(std::vector<uint32_t> dims, std::vector<double> data) {
  if (dims.size() > kMaxRank) fail(ErrorCode::Validation, "tensor rank exceeds 8");
  uint64_t n = element_count(dims);
  if (data.size() != n)
    fail(ErrorCode::Shape, "tensor data length does not match dims product");
  for (double v : data) {
    if (!std::isfinite(v)) fail(ErrorCode::Validation, "tensor values must be finite");
  }
  return Tensor{std::move(dims), std::move(data)};
}

Tensor Tensor::zeros(std::vector<uint32_t> dims) {
  uint64_t n = element_count(dims);
  return Tensor{std::move(dims), std::vector<double>(n, 0.0)};
}

Tensor read_tensor(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::Io, "cannot open tensor file: " + path.string());
  std::vector<unsigned char> bytes((std::istreambuf_iterator<char>(in)),
                                   std::istreambuf_iterator<char>());
  if (bytes.size() < 8 || std::memcmp(bytes.data(), kMagic, 4) != 0)
    fail(ErrorCode::Format, "bad DFT1 magic in " + path.string());
  uint32_t rank = load_u32le(bytes.data() + 4);
  if (rank > kMaxRank) fail(ErrorCode::Format, "DFT1 rank exceeds 8 in " + path.string());
  size_t header = 8 + size_t(rank) * 4;
  if (bytes.size() < header)
    fail(ErrorCode::Format, "truncated DFT1 header in " + path.string());
  std::vector<uint32_t> dims(rank);
  for (uint32_t i = 0; i < rank; ++i)
    dims[i] = load_u32le(bytes.data() + 8 + size_t(i) * 4);
  uint64_t n = element_count(dims);
  if (bytes.size() != header + n * 4)
    fail(ErrorCode::Format, "DFT1 payload size mismatch in " + path.string());
  std::vector<double> data(n);
  for (uint64_t i = 0; i < n; ++i) {
    float f = load_f32le(bytes.data() + header + i * 4);
    if (!std::isfinite(f))
      fail(ErrorCode::Format, "non-finite value in " + path.string());
    data[i] = f;
  }
  return Tensor{std::move(dims), std::move(data)};
}

void write_tensor(const Tensor& t, const std::filesystem::path& path) {
  std::vector<unsigned char> bytes(8 + t.dims.size() * 4 + t.data.size() * 4);
  std::memcpy(bytes.data(), kMagic, 4);
  store_u32le(t.rank(), bytes.data() + 4);
  for (size_t i = 0; i < t.dims.size(); ++i)
    store_u32le(t.dims[i], bytes.data() + 8 + i * 4);
  size_t header = 8 + t.dims.size() * 4;
  for (size_t i = 0; i < t.data.size(); ++i)
    store_f32le(static_cast<float>(t.data[i]), bytes.data() + header + i * 4);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(ErrorCode::Io, "cannot open tensor file for writing: " + path.string());
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) fail(ErrorCode::Io, "failed writing tensor file: " + path.string());
}

}  // namespace df
