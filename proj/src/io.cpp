#include "gs/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <sstream>

#include "gs/error.hpp"

namespace gs {

namespace {

void write_u32(std::ostream& out, uint32_t v) {
    out.write(reinterpret_cast<const char*>(&v), sizeof(v));
}
void write_u64(std::ostream& out, uint64_t v) {
    out.write(reinterpret_cast<const char*>(&v), sizeof(v));
}
void write_f64(std::ostream& out, double v) {
    out.write(reinterpret_cast<const char*>(&v), sizeof(v));
}

uint32_t read_u32(std::istream& in, const char* what) {
    uint32_t v = 0;
    if (!in.read(reinterpret_cast<char*>(&v), sizeof(v))) {
        throw FileFormatError(std::string("truncated file reading ") + what);
    }
    return v;
}
uint64_t read_u64(std::istream& in, const char* what) {
    uint64_t v = 0;
    if (!in.read(reinterpret_cast<char*>(&v), sizeof(v))) {
        throw FileFormatError(std::string("truncated file reading ") + what);
    }
    return v;
}
double read_f64(std::istream& in, const char* what) {
    double v = 0;
    if (!in.read(reinterpret_cast<char*>(&v), sizeof(v))) {
        throw FileFormatError(std::string("truncated file reading ") + what);
    }
    return v;
}

std::ofstream open_out(const std::filesystem::path& path, bool binary) {
    std::ofstream out(path, binary ? std::ios::binary : std::ios::out);
    if (!out) throw FileFormatError("cannot open for writing: " + path.string());
    return out;
}

std::ifstream open_in(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FileFormatError("cannot open for reading: " + path.string());
    return in;
}

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

double parse_double(const std::string& token, const std::string& context) {
    const char* begin = token.c_str();
    char* end = nullptr;
    double v = std::strtod(begin, &end);
    if (end == begin || *end != '\0') {
        throw FileFormatError("cannot parse number '" + token + "' in " + context);
    }
    return v;
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> fields;
    std::stringstream stream(line);
    std::string field;
    while (std::getline(stream, field, ',')) fields.push_back(field);
    return fields;
}

bool has_magic(std::istream& in, const char magic[4]) {
    char buf[4] = {};
    in.read(buf, 4);
    bool match = in.gcount() == 4 && std::memcmp(buf, magic, 4) == 0;
    in.clear();
    in.seekg(0);
    return match;
}

std::string read_line_or_throw(std::istream& in, const char* what) {
    std::string line;
    if (!std::getline(in, line)) {
        throw FileFormatError(std::string("missing ") + what);
    }
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return line;
}

}  // namespace

void write_frequency_file(const std::filesystem::path& path, const SamplingSet& set,
                          FileFormat format) {
    if (format == FileFormat::csv) {
        std::ofstream out = open_out(path, false);
        out << (set.dim == 1 ? "xi_x" : "xi_x,xi_y") << "\n";
        for (size_t m = 0; m < set.size(); ++m) {
            out << format_double(set.x(m));
            if (set.dim == 2) out << "," << format_double(set.y(m));
            out << "\n";
        }
        return;
    }
    std::ofstream out = open_out(path, true);
    out.write("GSFQ", 4);
    write_u32(out, 1);
    write_u32(out, static_cast<uint32_t>(set.dim));
    write_u64(out, set.size());
    for (double v : set.coords) write_f64(out, v);
}

SamplingSet read_frequency_file(const std::filesystem::path& path) {
    std::ifstream in = open_in(path);
    SamplingSet set;
    if (has_magic(in, "GSFQ")) {
        in.seekg(4);
        uint32_t version = read_u32(in, "version");
        if (version != 1) throw FileFormatError("unsupported frequency file version");
        uint32_t dim = read_u32(in, "dim");
        if (dim != 1 && dim != 2) throw FileFormatError("frequency file dim must be 1 or 2");
        uint64_t count = read_u64(in, "count");
        set.dim = static_cast<int>(dim);
        set.coords.resize(count * dim);
        for (double& v : set.coords) v = read_f64(in, "coordinates");
        return set;
    }
    std::string header = read_line_or_throw(in, "header");
    if (header == "xi_x") {
        set.dim = 1;
    } else if (header == "xi_x,xi_y") {
        set.dim = 2;
    } else {
        throw FileFormatError("bad frequency file header: " + header);
    }
    std::string line;
    size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::vector<std::string> fields = split_csv(line);
        if (fields.size() != static_cast<size_t>(set.dim)) {
            throw FileFormatError("wrong column count at line " + std::to_string(lineno));
        }
        for (const std::string& f : fields) {
            set.coords.push_back(parse_double(f, "frequency file"));
        }
    }
    if (set.coords.empty()) throw FileFormatError("frequency file has no points");
    return set;
}

void write_sample_file(const std::filesystem::path& path, const cvec& samples,
                       FileFormat format) {
    if (format == FileFormat::csv) {
        std::ofstream out = open_out(path, false);
        out << "re,im\n";
        for (const cd& z : samples) {
            out << format_double(z.real()) << "," << format_double(z.imag()) << "\n";
        }
        return;
    }
    std::ofstream out = open_out(path, true);
    out.write("GSSM", 4);
    write_u32(out, 1);
    write_u32(out, 1);
    write_u64(out, samples.size());
    for (const cd& z : samples) {
        write_f64(out, z.real());
        write_f64(out, z.imag());
    }
}

cvec read_sample_file(const std::filesystem::path& path) {
    std::ifstream in = open_in(path);
    cvec samples;
    if (has_magic(in, "GSSM")) {
        in.seekg(4);
        uint32_t version = read_u32(in, "version");
        if (version != 1) throw FileFormatError("unsupported sample file version");
        read_u32(in, "dim");
        uint64_t count = read_u64(in, "count");
        samples.resize(count);
        for (cd& z : samples) {
            double re = read_f64(in, "samples");
            double im = read_f64(in, "samples");
            z = cd(re, im);
        }
        return samples;
    }
    std::string header = read_line_or_throw(in, "header");
    if (header != "re,im") throw FileFormatError("bad sample file header: " + header);
    std::string line;
    size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::vector<std::string> fields = split_csv(line);
        if (fields.size() != 2) {
            throw FileFormatError("wrong column count at line " + std::to_string(lineno));
        }
        samples.emplace_back(parse_double(fields[0], "sample file"),
                             parse_double(fields[1], "sample file"));
    }
    if (samples.empty()) throw FileFormatError("sample file has no values");
    return samples;
}

void write_coefficient_file(const std::filesystem::path& path, const CoefficientFile& file) {
    std::ofstream out = open_out(path, true);
    out.write("GSCF", 4);
    write_u32(out, 1);
    write_u32(out, static_cast<uint32_t>(file.dim));
    uint8_t tag = (file.family == Family::haar)
                      ? 0
                      : static_cast<uint8_t>(static_cast<int>(file.family) + 1);
    out.write(reinterpret_cast<const char*>(&tag), 1);
    write_u32(out, static_cast<uint32_t>(file.J));
    for (const cd& z : file.values) {
        write_f64(out, z.real());
        write_f64(out, z.imag());
    }
}

CoefficientFile read_coefficient_file(const std::filesystem::path& path) {
    std::ifstream in = open_in(path);
    if (!has_magic(in, "GSCF")) throw FileFormatError("not a coefficient file (bad magic)");
    in.seekg(4);
    uint32_t version = read_u32(in, "version");
    if (version != 1) throw FileFormatError("unsupported coefficient file version");
    CoefficientFile file;
    uint32_t dim = read_u32(in, "dim");
    if (dim != 1 && dim != 2) throw FileFormatError("coefficient file dim must be 1 or 2");
    file.dim = static_cast<int>(dim);
    uint8_t tag = 0;
    if (!in.read(reinterpret_cast<char*>(&tag), 1)) {
        throw FileFormatError("truncated file reading family tag");
    }
    if (tag == 0) {
        file.family = Family::haar;
    } else if (tag >= 2 && tag <= 8) {
        file.family = static_cast<Family>(tag - 1);
    } else {
        throw FileFormatError("unknown family tag " + std::to_string(tag));
    }
    file.J = static_cast<int>(read_u32(in, "J"));
    if (file.J < 0 || file.dim * file.J > 26) {
        throw FileFormatError("coefficient file scale out of range");
    }
    size_t count = static_cast<size_t>(1) << (file.dim * file.J);
    file.values.resize(count);
    for (cd& z : file.values) {
        double re = read_f64(in, "coefficients");
        double im = read_f64(in, "coefficients");
        z = cd(re, im);
    }
    return file;
}

void write_evaluation_csv(const std::filesystem::path& path,
                          const ReconstructionEvaluation& eval) {
    if (eval.dim != 1) throw ShapeError("CSV evaluation output is 1D only");
    std::ofstream out = open_out(path, false);
    out << "x,value\n";
    size_t g = eval.points_per_axis();
    for (size_t i = 0; i < g; ++i) {
        double x = std::ldexp(static_cast<double>(i), -eval.resolution) - 0.5;
        out << format_double(x) << "," << format_double(eval.values[i]) << "\n";
    }
}

void write_evaluation_pgm(const std::filesystem::path& path,
                          const ReconstructionEvaluation& eval) {
    if (eval.dim != 2) throw ShapeError("PGM evaluation output is 2D only");
    size_t g = eval.points_per_axis();
    double lo = *std::min_element(eval.values.begin(), eval.values.end());
    double hi = *std::max_element(eval.values.begin(), eval.values.end());
    std::ofstream out = open_out(path, true);
    out << "P5\n# min " << format_double(lo) << " max " << format_double(hi) << "\n"
        << g << " " << g << "\n65535\n";
    double scale = (hi > lo) ? 65535.0 / (hi - lo) : 0.0;
    for (double v : eval.values) {
        auto word = static_cast<uint16_t>(std::lround((v - lo) * scale));
        // PGM 16-bit samples are big-endian
        char bytes[2] = {static_cast<char>(word >> 8), static_cast<char>(word & 0xff)};
        out.write(bytes, 2);
    }
}

void write_weight_file(const std::filesystem::path& path, const WeightSet& weights) {
    std::ofstream out = open_out(path, false);
    out << "mu\n";
    for (double v : weights.mu) out << format_double(v) << "\n";
}

WeightSet read_weight_file(const std::filesystem::path& path) {
    std::ifstream in = open_in(path);
    std::string header = read_line_or_throw(in, "header");
    if (header != "mu") throw FileFormatError("bad weight file header: " + header);
    WeightSet ws;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        ws.mu.push_back(parse_double(line, "weight file"));
    }
    return ws;
}

}  // namespace gs
