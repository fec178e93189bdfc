#include "nslab/field_io.hpp"

#include <bit>
#include <fstream>
#include <map>
#include <sstream>

#include "nslab/errors.hpp"

static_assert(std::endian::native == std::endian::little,
              "raw field files are little-endian; this build targets LE hosts");

namespace nslab {

namespace {

struct Meta {
    int n1, n2, n3, components;
};

void write_meta(const std::string& path, const Grid3& g, int components) {
    std::ofstream os(path + ".meta");
    if (!os) throw io_error("cannot write sidecar", path + ".meta");
    os << "n1=" << g.n1 << "\n"
       << "n2=" << g.n2 << "\n"
       << "n3=" << g.n3 << "\n"
       << "components=" << components << "\n"
       << "order=x1-fastest\n";
}

Meta read_meta(const std::string& path) {
    std::ifstream is(path + ".meta");
    if (!is) throw io_error("cannot read sidecar", path + ".meta");
    std::map<std::string, std::string> kv;
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#') continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw io_error("malformed sidecar line '" + line + "'", path);
        kv[line.substr(0, eq)] = line.substr(eq + 1);
    }
    for (const char* key : {"n1", "n2", "n3", "components", "order"})
        if (!kv.count(key)) throw io_error(std::string("sidecar missing key ") + key, path);
    if (kv["order"] != "x1-fastest")
        throw io_error("unsupported sample order '" + kv["order"] + "'", path);
    Meta m{std::stoi(kv["n1"]), std::stoi(kv["n2"]), std::stoi(kv["n3"]),
           std::stoi(kv["components"])};
    if (m.components != 1 && m.components != 3)
        throw io_error("components must be 1 or 3", path);
    return m;
}

void write_block(std::ofstream& os, const std::vector<double>& v) {
    os.write(reinterpret_cast<const char*>(v.data()),
             static_cast<std::streamsize>(v.size() * sizeof(double)));
}

void read_block(std::ifstream& is, std::vector<double>& v, const std::string& path) {
    is.read(reinterpret_cast<char*>(v.data()),
            static_cast<std::streamsize>(v.size() * sizeof(double)));
    if (!is) throw io_error("raw file truncated", path);
}

}  // namespace

void write_scalar_field(const std::string& path, const ScalarField& f) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw io_error("cannot write field", path);
    write_block(os, f.values);
    if (!os) throw io_error("write failed", path);
    write_meta(path, f.grid, 1);
}

void write_vector_field(const std::string& path, const VectorField& u) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw io_error("cannot write field", path);
    write_block(os, u.u1.values);
    write_block(os, u.u2.values);
    write_block(os, u.u3.values);
    if (!os) throw io_error("write failed", path);
    write_meta(path, u.grid, 3);
}

ScalarField read_scalar_field(const std::string& path) {
    const Meta m = read_meta(path);
    if (m.components != 1) throw io_error("expected a 1-component field", path);
    ScalarField f(Grid3(m.n1, m.n2, m.n3));
    std::ifstream is(path, std::ios::binary);
    if (!is) throw io_error("cannot read field", path);
    read_block(is, f.values, path);
    return f;
}

VectorField read_vector_field(const std::string& path) {
    const Meta m = read_meta(path);
    if (m.components != 3) throw io_error("expected a 3-component field", path);
    VectorField u(Grid3(m.n1, m.n2, m.n3));
    std::ifstream is(path, std::ios::binary);
    if (!is) throw io_error("cannot read field", path);
    read_block(is, u.u1.values, path);
    read_block(is, u.u2.values, path);
    read_block(is, u.u3.values, path);
    return u;
}

int field_components(const std::string& path) { return read_meta(path).components; }

}  // namespace nslab
