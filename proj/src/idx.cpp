#include "belief/idx.hpp"

#include <cmath>
#include <fstream>

namespace belief {

namespace {

constexpr std::uint32_t images_magic = 0x00000803;
constexpr std::uint32_t labels_magic = 0x00000801;

std::uint32_t read_u32_be(std::ifstream& f, const std::string& path) {
    unsigned char buf[4];
    if (!f.read(reinterpret_cast<char*>(buf), 4)) throw truncated_file(path);
    return (std::uint32_t(buf[0]) << 24) | (std::uint32_t(buf[1]) << 16) |
           (std::uint32_t(buf[2]) << 8) | std::uint32_t(buf[3]);
}

void write_u32_be(std::ofstream& f, std::uint32_t v) {
    unsigned char buf[4] = {static_cast<unsigned char>(v >> 24), static_cast<unsigned char>(v >> 16),
                            static_cast<unsigned char>(v >> 8), static_cast<unsigned char>(v)};
    f.write(reinterpret_cast<char*>(buf), 4);
}

struct raw_images {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::vector<std::uint8_t>> pixels;
};

raw_images read_images(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw truncated_file(path);
    if (read_u32_be(f, path) != images_magic) throw bad_magic(path);
    std::size_t count = read_u32_be(f, path);
    raw_images out;
    out.rows = read_u32_be(f, path);
    out.cols = read_u32_be(f, path);
    out.pixels.assign(count, std::vector<std::uint8_t>(out.rows * out.cols));
    for (auto& img : out.pixels)
        if (!f.read(reinterpret_cast<char*>(img.data()), static_cast<std::streamsize>(img.size())))
            throw truncated_file(path);
    return out;
}

std::vector<std::uint8_t> read_labels(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw truncated_file(path);
    if (read_u32_be(f, path) != labels_magic) throw bad_magic(path);
    std::size_t count = read_u32_be(f, path);
    std::vector<std::uint8_t> out(count);
    if (count && !f.read(reinterpret_cast<char*>(out.data()), static_cast<std::streamsize>(count)))
        throw truncated_file(path);
    return out;
}

// Block-average a 28x28 grayscale image onto a 10x10 grid, binarizing each
// cell by mean >= threshold (kept in integer arithmetic: sum >= thr * area).
std::vector<std::uint8_t> downsample_bits(const std::vector<std::uint8_t>& img,
                                          std::uint8_t threshold) {
    constexpr std::size_t src = 28, dst = 10;
    std::vector<std::uint8_t> bits;
    bits.reserve(dst * dst);
    for (std::size_t i = 0; i < dst; ++i) {
        std::size_t r0 = i * src / dst, r1 = (i + 1) * src / dst;
        for (std::size_t j = 0; j < dst; ++j) {
            std::size_t c0 = j * src / dst, c1 = (j + 1) * src / dst;
            std::uint64_t sum = 0;
            for (std::size_t r = r0; r < r1; ++r)
                for (std::size_t c = c0; c < c1; ++c) sum += img[r * src + c];
            std::uint64_t area = (r1 - r0) * (c1 - c0);
            bits.push_back(sum >= std::uint64_t(threshold) * area ? 1 : 0);
        }
    }
    return bits;
}

}  // namespace

dataset load_idx_dataset(const std::string& images_path, const std::string& labels_path,
                         const std::map<std::uint8_t, std::uint8_t>& keep_labels,
                         bool downsample_28_to_10, std::uint8_t byte_threshold) {
    raw_images imgs = read_images(images_path);
    std::vector<std::uint8_t> labels = read_labels(labels_path);
    if (imgs.pixels.size() != labels.size())
        throw label_mismatch(std::to_string(imgs.pixels.size()) + " images vs " +
                             std::to_string(labels.size()) + " labels");
    if (downsample_28_to_10 && (imgs.rows != 28 || imgs.cols != 28))
        throw dimension_mismatch("28x28 images required for downsampling, got " +
                                 std::to_string(imgs.rows) + "x" + std::to_string(imgs.cols));
    dataset d;
    for (std::size_t s = 0; s < imgs.pixels.size(); ++s) {
        std::uint8_t bit;
        if (keep_labels.empty()) {
            if (labels[s] > 1) throw non_binary_label("unmapped label " + std::to_string(labels[s]));
            bit = labels[s];
        } else {
            auto it = keep_labels.find(labels[s]);
            if (it == keep_labels.end()) continue;
            bit = it->second;
        }
        if (bit > 1) throw non_binary_label("label mapping target must be 0 or 1");
        if (downsample_28_to_10) {
            d.inputs.push_back(downsample_bits(imgs.pixels[s], byte_threshold));
        } else {
            std::vector<std::uint8_t> bits;
            bits.reserve(imgs.pixels[s].size());
            for (auto px : imgs.pixels[s]) bits.push_back(px >= byte_threshold ? 1 : 0);
            d.inputs.push_back(std::move(bits));
        }
        d.labels.push_back(bit);
    }
    return d;
}

void write_idx_images(const std::string& path, const std::vector<std::vector<std::uint8_t>>& images,
                      std::size_t rows, std::size_t cols) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw error("cannot open for writing: " + path);
    write_u32_be(f, images_magic);
    write_u32_be(f, static_cast<std::uint32_t>(images.size()));
    write_u32_be(f, static_cast<std::uint32_t>(rows));
    write_u32_be(f, static_cast<std::uint32_t>(cols));
    for (const auto& img : images) {
        if (img.size() != rows * cols) throw dimension_mismatch("image byte count differs from rows*cols");
        f.write(reinterpret_cast<const char*>(img.data()), static_cast<std::streamsize>(img.size()));
    }
    if (!f) throw error("write failed: " + path);
}

void write_idx_labels(const std::string& path, const std::vector<std::uint8_t>& labels) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw error("cannot open for writing: " + path);
    write_u32_be(f, labels_magic);
    write_u32_be(f, static_cast<std::uint32_t>(labels.size()));
    f.write(reinterpret_cast<const char*>(labels.data()), static_cast<std::streamsize>(labels.size()));
    if (!f) throw error("write failed: " + path);
}

namespace {

// Elliptical ring strokes standing in for handwritten zeros.
std::vector<std::uint8_t> ring_image(std::size_t k) {
    std::vector<std::uint8_t> img(28 * 28, 0);
    const double cx = 13.5 + static_cast<double>(k % 3) - 1.0;
    const double cy = 13.5 + static_cast<double>((k / 3) % 3) - 1.0;
    const double rx = 6.0 + static_cast<double>(k % 4);
    const double ry = 8.0 + static_cast<double>((k + 1) % 3);
    const double t = 0.16 + 0.05 * static_cast<double>(k % 3);
    const auto val = static_cast<std::uint8_t>(255 - 9 * (k % 5));
    for (std::size_t r = 0; r < 28; ++r) {
        for (std::size_t c = 0; c < 28; ++c) {
            double dx = (static_cast<double>(c) - cx) / rx;
            double dy = (static_cast<double>(r) - cy) / ry;
            double d = std::sqrt(dx * dx + dy * dy);
            if (std::abs(d - 1.0) <= t) img[r * 28 + c] = val;
        }
    }
    return img;
}

// Vertical bar strokes standing in for handwritten ones.
std::vector<std::uint8_t> bar_image(std::size_t k) {
    std::vector<std::uint8_t> img(28 * 28, 0);
    const std::size_t cx = 7 + 2 * (k % 7);
    const std::size_t halfw = 1 + (k % 3);
    const std::size_t r0 = 3 + (k % 4);
    const std::size_t r1 = 24 - ((k + 1) % 3);
    const auto val = static_cast<std::uint8_t>(255 - 7 * (k % 4));
    const std::size_t c0 = cx >= halfw ? cx - halfw : 0;
    const std::size_t c1 = std::min<std::size_t>(27, cx + halfw);
    for (std::size_t r = r0; r <= r1; ++r)
        for (std::size_t c = c0; c <= c1; ++c) img[r * 28 + c] = val;
    return img;
}

}  // namespace

std::vector<std::vector<std::uint8_t>> synthetic_digit_images() {
    std::vector<std::vector<std::uint8_t>> out;
    out.reserve(30);
    for (std::size_t k = 0; k < 15; ++k) out.push_back(ring_image(k));
    for (std::size_t k = 0; k < 15; ++k) out.push_back(bar_image(k));
    return out;
}

std::vector<std::uint8_t> synthetic_digit_labels() {
    std::vector<std::uint8_t> out(30, 0);
    for (std::size_t k = 15; k < 30; ++k) out[k] = 1;
    return out;
}

std::pair<std::string, std::string> write_synthetic_digits(const std::string& dir) {
    std::string images = dir + "/digits-images.idx";
    std::string labels = dir + "/digits-labels.idx";
    write_idx_images(images, synthetic_digit_images(), 28, 28);
    write_idx_labels(labels, synthetic_digit_labels());
    return {images, labels};
}

}  // namespace belief
