#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "xai/errors.hpp"

namespace xai {

// 8-bit RGB image, row-major, interleaved channels.
struct ImageU8 {
    std::size_t height = 0;
    std::size_t width = 0;
    std::vector<std::uint8_t> pixels;   // height * width * 3

    ImageU8() = default;
    ImageU8(std::size_t h, std::size_t w, std::uint8_t fill = 0)
        : height(h), width(w), pixels(h * w * 3, fill) {}

    std::uint8_t& at(std::size_t y, std::size_t x, std::size_t c) {
        return pixels[(y * width + x) * 3 + c];
    }
    std::uint8_t at(std::size_t y, std::size_t x, std::size_t c) const {
        return pixels[(y * width + x) * 3 + c];
    }
    bool operator==(const ImageU8& o) const {
        return height == o.height && width == o.width && pixels == o.pixels;
    }
};

// Binary PPM (P6, maxval 255).
std::vector<std::uint8_t> encode_ppm(const ImageU8& img);
void write_ppm(const ImageU8& img, const std::string& path);
ImageU8 read_ppm(const std::string& path);

// Binary PGM (P5). 16-bit maps are written big-endian per the Netpbm spec.
void write_pgm16(const std::vector<double>& values01, std::size_t h, std::size_t w,
                 const std::string& path);
// Label maps for debugging; maxval = max(region_count - 1, 1).
void write_pgm_labels(const std::vector<std::uint32_t>& labels, std::size_t h, std::size_t w,
                      std::uint32_t region_count, const std::string& path);

std::vector<std::uint8_t> read_file_bytes(const std::string& path);
void write_file_bytes(const std::string& path, const std::vector<std::uint8_t>& bytes);

} // namespace xai
