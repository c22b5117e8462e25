#include "cyclight/drl/checkpoint.hpp"

#include <cstring>
#include <fstream>

namespace cyclight::drl {

namespace {

constexpr char kMagic[4] = {'C', 'Y', 'Q', 'N'};
constexpr std::uint32_t kVersion = 1;

class Writer {
  public:
    explicit Writer(const std::filesystem::path& path)
        : out_(path, std::ios::binary | std::ios::trunc) {
        if (!out_) throw ConfigError("cannot write checkpoint: " + path.string());
    }

    template <typename T>
    void put(const T& v) {
        static_assert(std::is_trivially_copyable_v<T>);
        out_.write(reinterpret_cast<const char*>(&v), sizeof(v));
    }

    void put_vec(const std::vector<double>& v) {
        put(static_cast<std::uint64_t>(v.size()));
        out_.write(reinterpret_cast<const char*>(v.data()),
                   static_cast<std::streamsize>(v.size() * sizeof(double)));
    }

    bool ok() const { return static_cast<bool>(out_); }

  private:
    std::ofstream out_;
};

class Reader {
  public:
    explicit Reader(const std::filesystem::path& path) : in_(path, std::ios::binary) {
        if (!in_) throw ConfigError("cannot open checkpoint: " + path.string());
    }

    template <typename T>
    T get() {
        T v;
        in_.read(reinterpret_cast<char*>(&v), sizeof(v));
        if (!in_) throw ConfigError("truncated checkpoint");
        return v;
    }

    std::vector<double> get_vec() {
        const auto n = get<std::uint64_t>();
        std::vector<double> v(n);
        in_.read(reinterpret_cast<char*>(v.data()),
                 static_cast<std::streamsize>(n * sizeof(double)));
        if (!in_) throw ConfigError("truncated checkpoint");
        return v;
    }

  private:
    std::ifstream in_;
};

}  // namespace

void save_checkpoint(const Checkpoint& ckpt, const std::filesystem::path& path) {
    // Write to a sibling temp file first so an interrupted save never
    // clobbers the previous checkpoint.
    const std::filesystem::path tmp = path.string() + ".tmp";
    {
        Writer w(tmp);
        w.put(kMagic);
        w.put(kVersion);
        w.put(ckpt.dims);
        w.put(ckpt.cfg);
        w.put(ckpt.profile_hash);
        w.put(ckpt.seed);
        w.put_vec(ckpt.params);
        w.put_vec(ckpt.target_params);
        w.put_vec(ckpt.adam_m);
        w.put_vec(ckpt.adam_v);
        w.put(ckpt.adam_t);
        w.put(ckpt.action_count);
        w.put(ckpt.episode_count);
        w.put(ckpt.scaler_sum);
        w.put(ckpt.scaler_count);
        w.put(ckpt.scaler_divisor);
        w.put(static_cast<std::uint8_t>(ckpt.scaler_has_snapshot));
        w.put(ckpt.rng_state);
        if (!w.ok()) throw ConfigError("failed writing checkpoint: " + path.string());
    }
    std::filesystem::rename(tmp, path);
}

Checkpoint load_checkpoint(const std::filesystem::path& path) {
    Reader r(path);
    const auto magic = r.get<std::array<char, 4>>();
    if (std::memcmp(magic.data(), kMagic, 4) != 0) {
        throw ConfigError("not a checkpoint file: " + path.string());
    }
    const auto version = r.get<std::uint32_t>();
    if (version != kVersion) {
        throw ConfigError("unsupported checkpoint version " + std::to_string(version));
    }
    Checkpoint ckpt;
    ckpt.dims = r.get<NetDims>();
    ckpt.cfg = r.get<TrainConfig>();
    ckpt.profile_hash = r.get<std::uint64_t>();
    ckpt.seed = r.get<std::uint64_t>();
    ckpt.params = r.get_vec();
    ckpt.target_params = r.get_vec();
    ckpt.adam_m = r.get_vec();
    ckpt.adam_v = r.get_vec();
    ckpt.adam_t = r.get<std::uint64_t>();
    ckpt.action_count = r.get<std::uint64_t>();
    ckpt.episode_count = r.get<std::uint64_t>();
    ckpt.scaler_sum = r.get<double>();
    ckpt.scaler_count = r.get<std::uint64_t>();
    ckpt.scaler_divisor = r.get<double>();
    ckpt.scaler_has_snapshot = r.get<std::uint8_t>() != 0;
    ckpt.rng_state = r.get<Rng::State>();
    const std::size_t expected = ParamLayout::make(ckpt.dims).total;
    if (ckpt.params.size() != expected || ckpt.target_params.size() != expected ||
        ckpt.adam_m.size() != expected || ckpt.adam_v.size() != expected) {
        throw ConfigError("checkpoint parameter sizes do not match its dimensions");
    }
    return ckpt;
}

}  // namespace cyclight::drl
