#include "core/png_io.hpp"

#include <png.h>

#include <cstdio>
#include <cstring>
#include <memory>

#include "core/error.hpp"

namespace df {

namespace {

struct FileCloser {
  void operator()(std::FILE* f) const {
    if (f) std::fclose(f);
  }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

FilePtr open_file(const std::filesystem::path& path, const char* mode) {
  FilePtr f(std::fopen(path.string().c_str(), mode));
  if (!f) fail(ErrorCode::Io, "cannot open PNG file: " + path.string());
  return f;
}

// libpng error callbacks must not return; raising the toolkit error type
// here unwinds through libpng (built with unwind tables on this platform).
[[noreturn]] void read_error_fn(png_structp png, png_const_charp msg) {
  const auto* path = static_cast<const std::string*>(png_get_error_ptr(png));
  fail(ErrorCode::Format, "PNG decode failed (" +
                              std::string(msg ? msg : "libpng error") +
                              "): " + (path ? *path : ""));
}

[[noreturn]] void write_error_fn(png_structp png, png_const_charp msg) {
  const auto* path = static_cast<const std::string*>(png_get_error_ptr(png));
  fail(ErrorCode::Io, "PNG encode failed (" +
                          std::string(msg ? msg : "libpng error") +
                          "): " + (path ? *path : ""));
}

void png_warn_fn(png_structp, png_const_charp) {}

struct PngReader {
  png_structp png = nullptr;
  png_infop info = nullptr;
  std::string path;

  explicit PngReader(std::string p) : path(std::move(p)) {
    png = png_create_read_struct(PNG_LIBPNG_VER_STRING, &path, read_error_fn,
                                 png_warn_fn);
    if (png) info = png_create_info_struct(png);
    if (!png || !info) fail(ErrorCode::Internal, "libpng allocation failed");
  }
  ~PngReader() { png_destroy_read_struct(&png, &info, nullptr); }
};

struct PngWriter {
  png_structp png = nullptr;
  png_infop info = nullptr;
  std::string path;

  explicit PngWriter(std::string p) : path(std::move(p)) {
    png = png_create_write_struct(PNG_LIBPNG_VER_STRING, &path, write_error_fn,
                                  png_warn_fn);
    if (png) info = png_create_info_struct(png);
    if (!png || !info) fail(ErrorCode::Internal, "libpng allocation failed");
  }
  ~PngWriter() { png_destroy_write_struct(&png, &info); }
};

struct PngHeader {
  uint32_t width, height;
  int bit_depth, color_type;
};

void check_signature(std::FILE* f, const std::filesystem::path& path) {
  unsigned char sig[8];
  if (std::fread(sig, 1, 8, f) != 8 || png_sig_cmp(sig, 0, 8) != 0)
    fail(ErrorCode::Format, "not a PNG file: " + path.string());
}

PngHeader read_header(PngReader& r) {
  png_read_info(r.png, r.info);
  PngHeader h{};
  h.width = png_get_image_width(r.png, r.info);
  h.height = png_get_image_height(r.png, r.info);
  h.bit_depth = png_get_bit_depth(r.png, r.info);
  h.color_type = png_get_color_type(r.png, r.info);
  if (png_get_interlace_type(r.png, r.info) != PNG_INTERLACE_NONE)
    fail(ErrorCode::Format, "interlaced PNG unsupported: " + r.path);
  if (h.width < 1 || h.height < 1)
    fail(ErrorCode::Format, "empty PNG: " + r.path);
  return h;
}

}  // namespace

Gray16Png read_png_gray16(const std::filesystem::path& path) {
  FilePtr f = open_file(path, "rb");
  check_signature(f.get(), path);
  PngReader r(path.string());
  png_init_io(r.png, f.get());
  png_set_sig_bytes(r.png, 8);
  PngHeader h = read_header(r);
  if (h.color_type != PNG_COLOR_TYPE_GRAY || h.bit_depth != 16)
    fail(ErrorCode::Format,
         "disparity PNG must be 16-bit single-channel grayscale: " + path.string());
  png_set_swap(r.png);  // stored big-endian
  Gray16Png out;
  out.width = h.width;
  out.height = h.height;
  out.data.resize(size_t(h.width) * h.height);
  std::vector<png_bytep> rows(h.height);
  for (uint32_t y = 0; y < h.height; ++y)
    rows[y] = reinterpret_cast<png_bytep>(out.data.data() + size_t(y) * h.width);
  png_read_image(r.png, rows.data());
  png_read_end(r.png, nullptr);
  return out;
}

void write_png_gray16(const std::filesystem::path& path, uint32_t width,
                      uint32_t height, const std::vector<uint16_t>& data) {
  if (data.size() != size_t(width) * height)
    fail(ErrorCode::Shape, "PNG data length mismatch");
  FilePtr f = open_file(path, "wb");
  PngWriter w(path.string());
  png_init_io(w.png, f.get());
  png_set_IHDR(w.png, w.info, width, height, 16, PNG_COLOR_TYPE_GRAY,
               PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT,
               PNG_FILTER_TYPE_DEFAULT);
  png_write_info(w.png, w.info);
  png_set_swap(w.png);
  std::vector<png_bytep> rows(height);
  for (uint32_t y = 0; y < height; ++y)
    rows[y] = reinterpret_cast<png_bytep>(
        const_cast<uint16_t*>(data.data() + size_t(y) * width));
  png_write_image(w.png, rows.data());
  png_write_end(w.png, nullptr);
}

ImageRaster read_png_image(const std::filesystem::path& path) {
  FilePtr f = open_file(path, "rb");
  check_signature(f.get(), path);
  PngReader r(path.string());
  png_init_io(r.png, f.get());
  png_set_sig_bytes(r.png, 8);
  PngHeader h = read_header(r);
  if (h.bit_depth == 16)
    fail(ErrorCode::Format, "image PNG must be 8-bit: " + path.string());
  if (h.color_type & PNG_COLOR_MASK_ALPHA)
    fail(ErrorCode::Format, "image PNG with alpha unsupported: " + path.string());
  uint32_t channels = 1;
  if (h.color_type == PNG_COLOR_TYPE_PALETTE) {
    png_set_palette_to_rgb(r.png);
    channels = 3;
  } else if (h.color_type == PNG_COLOR_TYPE_RGB) {
    channels = 3;
  } else if (h.color_type == PNG_COLOR_TYPE_GRAY) {
    if (h.bit_depth < 8) png_set_expand_gray_1_2_4_to_8(r.png);
    channels = 1;
  } else {
    fail(ErrorCode::Format, "unsupported PNG color type: " + path.string());
  }
  png_read_update_info(r.png, r.info);
  std::vector<uint8_t> data(size_t(h.width) * h.height * channels);
  std::vector<png_bytep> rows(h.height);
  for (uint32_t y = 0; y < h.height; ++y)
    rows[y] = data.data() + size_t(y) * h.width * channels;
  png_read_image(r.png, rows.data());
  png_read_end(r.png, nullptr);
  return ImageRaster::create(h.width, h.height, channels, std::move(data));
}

void write_png_image(const ImageRaster& img, const std::filesystem::path& path) {
  FilePtr f = open_file(path, "wb");
  PngWriter w(path.string());
  png_init_io(w.png, f.get());
  int color_type = img.channels == 3 ? PNG_COLOR_TYPE_RGB : PNG_COLOR_TYPE_GRAY;
  png_set_IHDR(w.png, w.info, img.width, img.height, 8, color_type,
               PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT,
               PNG_FILTER_TYPE_DEFAULT);
  png_write_info(w.png, w.info);
  std::vector<png_bytep> rows(img.height);
  for (uint32_t y = 0; y < img.height; ++y)
    rows[y] = const_cast<uint8_t*>(img.data.data() +
                                   size_t(y) * img.width * img.channels);
  png_write_image(w.png, rows.data());
  png_write_end(w.png, nullptr);
}

IndexPng read_png_indices(const std::filesystem::path& path) {
  FilePtr f = open_file(path, "rb");
  check_signature(f.get(), path);
  PngReader r(path.string());
  png_init_io(r.png, f.get());
  png_set_sig_bytes(r.png, 8);
  PngHeader h = read_header(r);
  if (h.bit_depth > 8)
    fail(ErrorCode::Format, "label PNG must be 8-bit: " + path.string());
  if (h.color_type != PNG_COLOR_TYPE_GRAY &&
      h.color_type != PNG_COLOR_TYPE_PALETTE)
    fail(ErrorCode::Format,
         "label PNG must be single-channel indexed or grayscale: " + path.string());
  if (h.bit_depth < 8) png_set_packing(r.png);  // widen indices, keep values
  png_read_update_info(r.png, r.info);
  IndexPng out;
  out.width = h.width;
  out.height = h.height;
  out.data.resize(size_t(h.width) * h.height);
  std::vector<png_bytep> rows(h.height);
  for (uint32_t y = 0; y < h.height; ++y)
    rows[y] = out.data.data() + size_t(y) * h.width;
  png_read_image(r.png, rows.data());
  png_read_end(r.png, nullptr);
  return out;
}

void write_png_indexed(const std::filesystem::path& path, uint32_t width,
                       uint32_t height, const std::vector<uint8_t>& data) {
  if (data.size() != size_t(width) * height)
    fail(ErrorCode::Shape, "PNG data length mismatch");
  FilePtr f = open_file(path, "wb");
  PngWriter w(path.string());
  png_init_io(w.png, f.get());
  png_set_IHDR(w.png, w.info, width, height, 8, PNG_COLOR_TYPE_PALETTE,
               PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT,
               PNG_FILTER_TYPE_DEFAULT);
  auto pal = label_palette();
  std::vector<png_color> colors(256);
  for (size_t i = 0; i < 256; ++i)
    colors[i] = png_color{pal[i][0], pal[i][1], pal[i][2]};
  png_set_PLTE(w.png, w.info, colors.data(), 256);
  png_write_info(w.png, w.info);
  std::vector<png_bytep> rows(height);
  for (uint32_t y = 0; y < height; ++y)
    rows[y] = const_cast<uint8_t*>(data.data() + size_t(y) * width);
  png_write_image(w.png, rows.data());
  png_write_end(w.png, nullptr);
}

std::array<std::array<uint8_t, 3>, 256> label_palette() {
  std::array<std::array<uint8_t, 3>, 256> pal{};
  for (size_t i = 0; i < 256; ++i) {
    // fixed multiplicative spread; index 255 (default ignore) is black
    pal[i] = {uint8_t((i * 67 + 29) & 0xff), uint8_t((i * 97 + 11) & 0xff),
              uint8_t((i * 151 + 83) & 0xff)};
  }
  pal[255] = {0, 0, 0};
  return pal;
}

}  // namespace df
