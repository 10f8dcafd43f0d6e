#include "boltzkit/field_io.hpp"

#include <cstdio>
#include <cstring>
#include <fstream>
#include <stdexcept>

namespace boltzkit {

namespace {

constexpr char magic[8] = {'K', 'I', 'N', 'F', 'L', 'D', '0', '1'};
constexpr std::uint32_t format_version = 1;

template <typename T>
void put(std::ofstream& out, T value) {
    out.write(reinterpret_cast<const char*>(&value), sizeof value);
}

template <typename T>
T get(std::ifstream& in) {
    T value{};
    in.read(reinterpret_cast<char*>(&value), sizeof value);
    if (!in) throw std::runtime_error("field container: truncated file");
    return value;
}

void write_header(std::ofstream& out, const TrajectoryHeader& h) {
    out.write(magic, sizeof magic);
    put(out, format_version);
    put(out, h.d_x);
    put(out, h.n_x);
    put(out, h.n);
    put(out, h.extent);
    put(out, h.length);
    put(out, h.n_t);
    put(out, h.t0);
    put(out, h.dt);
}

}  // namespace

void write_trajectory(const std::string& path, std::span<const SlabField> traj,
                      double t0, double dt) {
    if (traj.empty()) throw std::invalid_argument("write_trajectory: empty trajectory");
    for (std::size_t i = 1; i < traj.size(); ++i) traj[i].check_same_shape(traj[0]);

    const SlabField& first = traj[0];
    TrajectoryHeader h;
    h.d_x = first.n_x() > 1 ? 1 : 0;
    h.n_x = static_cast<std::uint32_t>(first.n_x());
    h.n = static_cast<std::uint32_t>(first.vgrid().n());
    h.extent = first.vgrid().extent();
    h.length = first.n_x() > 1 ? first.length() : 0.0;
    h.n_t = static_cast<std::uint32_t>(traj.size());
    h.t0 = t0;
    h.dt = traj.size() > 1 ? dt : 0.0;

    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("write_trajectory: cannot open " + path);
    write_header(out, h);
    for (const SlabField& f : traj)
        out.write(reinterpret_cast<const char*>(f.values().data()),
                  static_cast<std::streamsize>(f.values().size() * sizeof(double)));
    if (!out) throw std::runtime_error("write_trajectory: write failed on " + path);
}

LoadedTrajectory read_trajectory(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("read_trajectory: cannot open " + path);

    char head[8];
    in.read(head, sizeof head);
    if (!in || std::memcmp(head, magic, sizeof magic) != 0)
        throw std::runtime_error("read_trajectory: bad magic in " + path);
    const auto version = get<std::uint32_t>(in);
    if (version != format_version)
        throw std::runtime_error("read_trajectory: unsupported version in " + path);

    LoadedTrajectory loaded;
    TrajectoryHeader& h = loaded.header;
    h.d_x = get<std::uint32_t>(in);
    h.n_x = get<std::uint32_t>(in);
    h.n = get<std::uint32_t>(in);
    h.extent = get<double>(in);
    h.length = get<double>(in);
    h.n_t = get<std::uint32_t>(in);
    h.t0 = get<double>(in);
    h.dt = get<double>(in);

    if (h.d_x > 1 || h.n_x == 0 || h.n_t == 0)
        throw std::runtime_error("read_trajectory: inconsistent header in " + path);

    const VelocityGrid grid(static_cast<int>(h.n), h.extent);
    const double length = h.d_x == 0 ? 1.0 : h.length;
    loaded.fields.reserve(h.n_t);
    for (std::uint32_t i = 0; i < h.n_t; ++i) {
        SlabField f(static_cast<int>(h.n_x), length, grid);
        in.read(reinterpret_cast<char*>(f.values().data()),
                static_cast<std::streamsize>(f.values().size() * sizeof(double)));
        if (!in) throw std::runtime_error("read_trajectory: truncated payload in " + path);
        loaded.fields.push_back(std::move(f));
    }
    return loaded;
}

void write_field(const std::string& path, const SlabField& f) {
    write_trajectory(path, std::span<const SlabField>(&f, 1), 0.0, 0.0);
}

void write_field(const std::string& path, const VelocityField& f) {
    SlabField slab(1, 1.0, f.grid());
    slab.values() = f.values();
    write_field(path, slab);
}

SlabField read_slab_field(const std::string& path) {
    LoadedTrajectory loaded = read_trajectory(path);
    if (loaded.fields.size() != 1)
        throw std::runtime_error("read_slab_field: " + path + " holds a trajectory");
    return std::move(loaded.fields.front());
}

VelocityField read_velocity_field(const std::string& path) {
    SlabField slab = read_slab_field(path);
    if (slab.n_x() != 1)
        throw std::runtime_error("read_velocity_field: " + path + " is a slab field");
    return {slab.vgrid(), std::move(slab.values())};
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

struct CsvWriter::Impl {
    std::ofstream out;
    std::size_t columns = 0;
    bool finished = false;
    std::string path;
};

CsvWriter::CsvWriter(const std::string& path, std::span<const std::string> columns)
    : impl_(new Impl) {
    impl_->out.open(path);
    impl_->path = path;
    if (!impl_->out) {
        delete impl_;
        throw std::runtime_error("CsvWriter: cannot open " + path);
    }
    impl_->columns = columns.size();
    for (std::size_t i = 0; i < columns.size(); ++i)
        impl_->out << (i ? "," : "") << columns[i];
    impl_->out << '\n';
}

CsvWriter::~CsvWriter() { delete impl_; }

void CsvWriter::row(std::span<const double> values) {
    if (values.size() != impl_->columns)
        throw std::invalid_argument("CsvWriter: row width does not match header");
    for (std::size_t i = 0; i < values.size(); ++i)
        impl_->out << (i ? "," : "") << format_double(values[i]);
    impl_->out << '\n';
}

void CsvWriter::raw_row(const std::string& line) { impl_->out << line << '\n'; }

void CsvWriter::finish(const std::map<std::string, std::string>& metadata) {
    if (impl_->finished) throw std::logic_error("CsvWriter: finish called twice");
    for (const auto& [key, value] : metadata) impl_->out << "# " << key << "=" << value << '\n';
    impl_->out.close();
    impl_->finished = true;
    if (impl_->out.fail()) throw std::runtime_error("CsvWriter: write failed on " + impl_->path);
}

void write_field_csv(const std::string& path, const VelocityField& f,
                     const std::map<std::string, std::string>& metadata) {
    const std::string cols[] = {"vx", "vy", "vz", "value"};
    CsvWriter csv(path, cols);
    const VelocityGrid& g = f.grid();
    for (std::size_t i = 0; i < f.size(); ++i) {
        const Vec3 v = g.node(i);
        const double vals[] = {v.x, v.y, v.z, f[i]};
        csv.row(vals);
    }
    csv.finish(metadata);
}

}  // namespace boltzkit
