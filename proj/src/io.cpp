#include "hexa/io.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cmath>
#include <cstddef>
#include <fstream>
#include <sstream>

#include "hexa/errors.hpp"

namespace hexa {

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw IoError("read failure on " + path);
    return std::move(buf).str();
}

void spit(const std::string& path, const std::string& bytes) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + path + " for writing");
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    out.flush();
    if (!out) throw IoError("write failure on " + path);
}

// Sequential reader over an in-memory file; keeps the byte offset for errors.
class Cursor {
public:
    Cursor(const std::string& bytes, const std::string& path) : bytes_(bytes), path_(path) {}

    std::size_t offset() const { return pos_; }
    bool eof() const { return pos_ >= bytes_.size(); }

    uint8_t u8() {
        need(1, "byte");
        return static_cast<uint8_t>(bytes_[pos_++]);
    }
    uint32_t u32le() {
        need(4, "u32");
        uint32_t v = 0;
        for (int i = 0; i < 4; ++i)
            v |= static_cast<uint32_t>(static_cast<uint8_t>(bytes_[pos_ + i])) << (8 * i);
        pos_ += 4;
        return v;
    }
    float f32le() { return std::bit_cast<float>(u32le()); }

    void expect(const std::string& literal, const std::string& what) {
        if (bytes_.compare(pos_, literal.size(), literal) != 0)
            fail("expected " + what);
        pos_ += literal.size();
    }

    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError(path_ + ": " + what, pos_);
    }

private:
    void need(std::size_t n, const std::string& what) const {
        if (pos_ + n > bytes_.size()) fail("truncated file, needed " + what);
    }

    const std::string& bytes_;
    std::string path_;
    std::size_t pos_ = 0;
};

void put_u32le(std::string& out, uint32_t v) {
    for (int i = 0; i < 4; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

} // namespace

void write_hext(const std::string& path, const HextTensor& t) {
    std::size_t count = t.dims.empty() ? 0 : 1;
    for (uint32_t d : t.dims) count *= d;
    if (t.data.size() != count) throw ShapeError("write_hext: data size does not match dims");
    if (t.has_mask) {
        if (t.dims.size() < 2) throw ShapeError("write_hext: mask plane needs rank >= 2");
        const std::size_t plane = static_cast<std::size_t>(t.dims[t.dims.size() - 2]) *
                                  t.dims[t.dims.size() - 1];
        if (t.mask.size() != plane) throw ShapeError("write_hext: mask size does not match last two dims");
    }

    std::string out;
    out.reserve(7 + 4 * t.dims.size() + 4 * t.data.size() + t.mask.size());
    out += "HEXT";
    out.push_back(0x01);
    out.push_back(t.has_mask ? 0x01 : 0x00);
    out.push_back(static_cast<char>(t.dims.size()));
    for (uint32_t d : t.dims) put_u32le(out, d);
    for (float v : t.data) put_u32le(out, std::bit_cast<uint32_t>(v));
    if (t.has_mask)
        for (uint8_t m : t.mask) out.push_back(m ? 1 : 0);
    spit(path, out);
}

HextTensor read_hext(const std::string& path) {
    const std::string bytes = slurp(path);
    Cursor cur(bytes, path);
    cur.expect("HEXT", "magic HEXT");
    const uint8_t version = cur.u8();
    if (version != 0x01) cur.fail("unsupported version " + std::to_string(version));
    const uint8_t flags = cur.u8();
    if (flags & ~0x01) cur.fail("unknown flag bits");
    const uint8_t rank = cur.u8();

    HextTensor t;
    t.has_mask = (flags & 0x01) != 0;
    t.dims.resize(rank);
    std::size_t count = rank == 0 ? 0 : 1;
    for (int i = 0; i < rank; ++i) {
        t.dims[i] = cur.u32le();
        if (t.dims[i] == 0) cur.fail("zero dimension");
        count *= t.dims[i];
    }
    if (t.has_mask && rank < 2) cur.fail("mask plane needs rank >= 2");

    t.data.resize(count);
    for (std::size_t i = 0; i < count; ++i) t.data[i] = cur.f32le();
    if (t.has_mask) {
        const std::size_t plane = static_cast<std::size_t>(t.dims[rank - 2]) * t.dims[rank - 1];
        t.mask.resize(plane);
        for (std::size_t i = 0; i < plane; ++i) {
            const uint8_t m = cur.u8();
            if (m > 1) cur.fail("mask byte not 0/1");
            t.mask[i] = m;
        }
    }
    if (!cur.eof()) cur.fail("trailing bytes");
    return t;
}

void save_hext(const std::string& path, const HexImage& img) {
    HextTensor t;
    t.dims = {static_cast<uint32_t>(img.channels), static_cast<uint32_t>(img.orientations),
              static_cast<uint32_t>(img.rows), static_cast<uint32_t>(img.cols)};
    t.data = img.data;
    t.has_mask = true;
    t.mask = img.mask;
    write_hext(path, t);
}

HexImage load_hex_image(const std::string& path) {
    const HextTensor t = read_hext(path);
    if (t.dims.size() != 4)
        throw ParseError(path + ": image tensor must have rank 4, got " +
                         std::to_string(t.dims.size()), 6);
    const int rows = static_cast<int>(t.dims[2]);
    const int cols = static_cast<int>(t.dims[3]);
    HexImage img(static_cast<int>(t.dims[0]), static_cast<int>(t.dims[1]), rows, cols,
                 Cell{(rows - 1) / 2, (cols - 1) / 2});
    img.data = t.data;
    if (t.has_mask) img.mask = t.mask;
    return img;
}

void save_hext(const std::string& path, const HexFilter& psi) {
    HextTensor t;
    t.dims = {static_cast<uint32_t>(psi.out_channels), static_cast<uint32_t>(psi.in_channels),
              static_cast<uint32_t>(psi.side), static_cast<uint32_t>(psi.side)};
    t.data = psi.data;
    t.has_mask = true;
    t.mask = psi.mask;
    write_hext(path, t);
}

HexFilter load_hex_filter(const std::string& path) {
    const HextTensor t = read_hext(path);
    if (t.dims.size() != 4)
        throw ParseError(path + ": filter tensor must have rank 4, got " +
                         std::to_string(t.dims.size()), 6);
    const int side = static_cast<int>(t.dims[3]);
    if (static_cast<int>(t.dims[2]) != side || side % 2 == 0)
        throw ParseError(path + ": filter spatial dims must be square with odd side", 7);
    if (!t.has_mask)
        throw ParseError(path + ": filter file is missing the disk mask plane", 5);

    // Recover the disk radius as the largest hex distance the mask reaches.
    const int ctr = (side - 1) / 2;
    int radius = 0;
    for (int r = 0; r < side; ++r)
        for (int c = 0; c < side; ++c)
            if (t.mask[static_cast<std::size_t>(r) * side + c])
                radius = std::max(radius, hex_distance({0, 0}, {c - ctr, r - ctr}));
    if (radius > ctr || t.mask != hex_disk_mask(radius, side))
        throw ParseError(path + ": mask plane is not a centered hex disk", 7);

    HexFilter psi(static_cast<int>(t.dims[0]), static_cast<int>(t.dims[1]), radius, side);
    psi.data = t.data;
    return psi;
}

PlanarImage read_pgm(const std::string& path) {
    const std::string bytes = slurp(path);
    std::size_t pos = 0;
    auto fail = [&](const std::string& what) -> void {
        throw ParseError(path + ": " + what, pos);
    };
    auto skip_space = [&] {
        while (pos < bytes.size()) {
            const char ch = bytes[pos];
            if (ch == '#') {
                while (pos < bytes.size() && bytes[pos] != '\n') ++pos;
            } else if (std::isspace(static_cast<unsigned char>(ch))) {
                ++pos;
            } else {
                break;
            }
        }
    };
    auto read_int = [&]() -> int {
        skip_space();
        if (pos >= bytes.size() || !std::isdigit(static_cast<unsigned char>(bytes[pos])))
            fail("expected integer");
        long v = 0;
        while (pos < bytes.size() && std::isdigit(static_cast<unsigned char>(bytes[pos]))) {
            v = v * 10 + (bytes[pos] - '0');
            if (v > 1 << 30) fail("integer out of range");
            ++pos;
        }
        return static_cast<int>(v);
    };

    if (bytes.size() < 2 || bytes[0] != 'P' || (bytes[1] != '5' && bytes[1] != '2'))
        fail("expected PGM magic P5 or P2");
    const bool raw = bytes[1] == '5';
    pos = 2;
    const int cols = read_int();
    const int rows = read_int();
    const int maxval = read_int();
    if (cols < 1 || rows < 1) fail("dimensions must be positive");
    if (maxval < 1 || maxval > 255) fail("maxval must be in [1, 255]");

    PlanarImage img;
    img.rows = rows;
    img.cols = cols;
    img.data.resize(static_cast<std::size_t>(rows) * cols);
    const std::size_t count = img.data.size();
    if (raw) {
        if (pos >= bytes.size() || !std::isspace(static_cast<unsigned char>(bytes[pos])))
            fail("expected single whitespace before raster");
        ++pos;
        if (pos + count > bytes.size()) fail("truncated raster");
        for (std::size_t i = 0; i < count; ++i) {
            const uint8_t v = static_cast<uint8_t>(bytes[pos + i]);
            if (v > maxval) {
                pos += i;
                fail("sample exceeds maxval");
            }
            img.data[i] = static_cast<float>(v) / static_cast<float>(maxval);
        }
        pos += count;
    } else {
        for (std::size_t i = 0; i < count; ++i) {
            const int v = read_int();
            if (v > maxval) fail("sample exceeds maxval");
            img.data[i] = static_cast<float>(v) / static_cast<float>(maxval);
        }
    }
    return img;
}

void write_pgm(const std::string& path, const PlanarImage& img) {
    if (img.rows < 1 || img.cols < 1) throw ArgumentError("write_pgm: empty image");
    std::string out = "P5\n" + std::to_string(img.cols) + " " + std::to_string(img.rows) + "\n255\n";
    out.reserve(out.size() + img.data.size());
    for (float v : img.data) {
        const float clamped = std::clamp(v, 0.0f, 1.0f);
        out.push_back(static_cast<char>(std::lround(clamped * 255.0f)));
    }
    spit(path, out);
}

void render_pgm(const HexImage& f, int channel, int orientation, const std::string& path) {
    write_pgm(path, render_plane(f, channel, orientation));
}

} // namespace hexa
