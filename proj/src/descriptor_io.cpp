#include "ldop/descriptor_io.hpp"

#include "ldop/error.hpp"

#include <bit>
#include <cstring>
#include <fstream>
#include <iterator>
#include <ostream>

#include <fmt/format.h>

namespace ldop {

namespace {

constexpr char kMagic[8] = {'L', 'D', 'O', 'P', 'D', 'E', 'S', 'C'};

class Writer {
public:
    void bytes(const void* data, std::size_t n) {
        const auto* p = static_cast<const std::uint8_t*>(data);
        out_.insert(out_.end(), p, p + n);
    }
    template <typename T>
    void le(T value) {
        using U = std::make_unsigned_t<T>;
        auto u = static_cast<U>(value);
        for (std::size_t i = 0; i < sizeof(T); ++i) {
            out_.push_back(static_cast<std::uint8_t>(u & 0xFF));
            u = static_cast<U>(u >> 8);
        }
    }
    void f64(double v) { le(std::bit_cast<std::uint64_t>(v)); }
    void str(const std::string& s) {
        if (s.size() > 0xFFFF) {
            throw ArgumentError("string too long for descriptor file: " + s.substr(0, 64) + "...");
        }
        le(static_cast<std::uint16_t>(s.size()));
        bytes(s.data(), s.size());
    }
    std::vector<std::uint8_t> take() { return std::move(out_); }

private:
    std::vector<std::uint8_t> out_;
};

class Reader {
public:
    explicit Reader(std::span<const std::uint8_t> in) : in_(in) {}

    std::span<const std::uint8_t> bytes(std::size_t n) {
        if (in_.size() - pos_ < n) {
            throw FormatError("descriptor file truncated");
        }
        auto s = in_.subspan(pos_, n);
        pos_ += n;
        return s;
    }
    template <typename T>
    T le() {
        const auto b = bytes(sizeof(T));
        std::make_unsigned_t<T> u = 0;
        for (std::size_t i = sizeof(T); i-- > 0;) {
            u = static_cast<std::make_unsigned_t<T>>((u << 8) | b[i]);
        }
        return static_cast<T>(u);
    }
    double f64() { return std::bit_cast<double>(le<std::uint64_t>()); }
    std::string str() {
        const auto n = le<std::uint16_t>();
        const auto b = bytes(n);
        return {b.begin(), b.end()};
    }
    bool done() const { return pos_ == in_.size(); }

private:
    std::span<const std::uint8_t> in_;
    std::size_t pos_ = 0;
};

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string quoted = "\"";
    for (const char c : s) {
        quoted += c;
        if (c == '"') {
            quoted += '"';
        }
    }
    return quoted + '"';
}

} // namespace

std::vector<std::uint8_t> encode_descriptors(std::span<const DescriptorRecord> records) {
    if (records.empty()) {
        throw ArgumentError("no descriptors to write");
    }
    const Descriptor& first = records.front().descriptor;
    Writer w;
    w.bytes(kMagic, sizeof kMagic);
    w.le(kDescriptorFormatVersion);
    w.le(static_cast<std::uint8_t>(first.directions));
    w.le(static_cast<std::uint16_t>(first.layout.size()));
    for (const auto& seg : first.layout) {
        w.le(static_cast<std::uint8_t>(seg.kind));
        w.le(static_cast<std::uint8_t>(seg.radius));
    }
    w.le(static_cast<std::uint32_t>(records.size()));
    for (const auto& rec : records) {
        if (!rec.descriptor.same_layout(first) ||
            rec.descriptor.values.size() != first.layout.size() * first.segment_length()) {
            throw ArgumentError("descriptor for " + rec.id + " does not match the file layout");
        }
        w.str(rec.label);
        w.str(rec.id);
        for (const double v : rec.descriptor.values) {
            w.f64(v);
        }
    }
    return w.take();
}

std::vector<DescriptorRecord> decode_descriptors(std::span<const std::uint8_t> bytes) {
    Reader r(bytes);
    const auto magic = r.bytes(sizeof kMagic);
    if (std::memcmp(magic.data(), kMagic, sizeof kMagic) != 0) {
        throw FormatError("not a descriptor file (bad magic)");
    }
    const auto version = r.le<std::uint16_t>();
    if (version != kDescriptorFormatVersion) {
        throw FormatError("unsupported descriptor file version " + std::to_string(version));
    }
    const int directions = r.le<std::uint8_t>();
    if (directions < 2 || directions > 16) {
        throw FormatError("invalid direction count " + std::to_string(directions));
    }
    const auto segment_count = r.le<std::uint16_t>();
    std::vector<Segment> layout;
    for (std::uint16_t i = 0; i < segment_count; ++i) {
        const auto kind = r.le<std::uint8_t>();
        const auto radius = r.le<std::uint8_t>();
        if (kind > 1 || radius < 1 || radius > 12) {
            throw FormatError("invalid segment descriptor in header");
        }
        layout.push_back({static_cast<DescriptorKind>(kind), radius});
    }
    const auto count = r.le<std::uint32_t>();
    const std::size_t length = layout.size() * (std::size_t{1} << directions);
    std::vector<DescriptorRecord> records;
    records.reserve(count);
    for (std::uint32_t i = 0; i < count; ++i) {
        DescriptorRecord rec;
        rec.label = r.str();
        rec.id = r.str();
        rec.descriptor = {directions, layout, std::vector<double>(length)};
        for (auto& v : rec.descriptor.values) {
            v = r.f64();
        }
        records.push_back(std::move(rec));
    }
    if (!r.done()) {
        throw FormatError("trailing bytes after last descriptor record");
    }
    return records;
}

void write_descriptors(const std::filesystem::path& path, std::span<const DescriptorRecord> records) {
    const auto bytes = encode_descriptors(records);
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot open " + path.string() + " for writing");
    }
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    if (!out) {
        throw IoError("error writing " + path.string());
    }
}

std::vector<DescriptorRecord> read_descriptors(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open descriptor file " + path.string());
    }
    const std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    try {
        return decode_descriptors(bytes);
    } catch (const FormatError& e) {
        throw FormatError(path.string() + ": " + e.what());
    }
}

void write_descriptor_csv(std::ostream& out, std::span<const DescriptorRecord> records) {
    for (const auto& rec : records) {
        out << csv_field(rec.id);
        for (const double v : rec.descriptor.values) {
            out << ',' << fmt::format("{:.17g}", v);
        }
        out << '\n';
    }
}

} // namespace ldop
