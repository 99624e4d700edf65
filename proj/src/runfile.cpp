#include "coperm/runfile.hpp"

#include <algorithm>
#include <array>
#include <queue>

#include "coperm/error.hpp"

namespace coperm {

namespace {

template <typename T>
void put_le(std::string& out, T value, int bytes) {
  for (int i = 0; i < bytes; ++i) out.push_back(static_cast<char>((value >> (8 * i)) & 0xff));
}

template <typename T>
T get_le(const char* data, int bytes) {
  T value = 0;
  for (int i = bytes - 1; i >= 0; --i) value = (value << 8) | static_cast<unsigned char>(data[i]);
  return value;
}

}  // namespace

void persist_fingerprints(int n, EdgeCount m, std::vector<RunRecord> records,
                          const std::filesystem::path& path) {
  for (const RunRecord& r : records) {
    if (r.fingerprint.n() != n || r.fingerprint.m() != m) {
      throw Error(ErrorCode::ShardViolation, "record does not belong to shard n=" +
                                                 std::to_string(n) + " m=" + std::to_string(m));
    }
    if (r.graph6.size() > 255) throw Error(ErrorCode::InvalidArgument, "graph6 word too long");
  }
  std::sort(records.begin(), records.end());

  std::string header(kRunMagic, sizeof(kRunMagic));
  put_le(header, kRunVersion, 2);
  put_le(header, n, 1);
  put_le(header, m, 2);
  put_le(header, static_cast<std::uint64_t>(records.size()), 8);

  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::Io, "cannot create " + path.string());
  out.write(header.data(), static_cast<std::streamsize>(header.size()));
  for (const RunRecord& r : records) {
    const std::string& fp = r.fingerprint.bytes();
    out.write(fp.data(), static_cast<std::streamsize>(fp.size()));
    out.put(static_cast<char>(r.graph6.size()));
    out.write(r.graph6.data(), static_cast<std::streamsize>(r.graph6.size()));
  }
  out.flush();
  if (!out) throw Error(ErrorCode::Io, "write failure on " + path.string());
}

RunReader::RunReader(const std::filesystem::path& path) : path_(path), in_(path, std::ios::binary) {
  if (!in_) throw Error(ErrorCode::Io, "cannot open " + path.string());
  std::array<char, kRunHeaderSize> header{};
  if (!in_.read(header.data(), header.size())) {
    throw Error(ErrorCode::BadRunFile, path.string() + ": truncated header");
  }
  if (!std::equal(std::begin(kRunMagic), std::end(kRunMagic), header.begin())) {
    throw Error(ErrorCode::BadRunFile, path.string() + ": bad magic");
  }
  const auto version = get_le<std::uint16_t>(header.data() + 4, 2);
  if (version != kRunVersion) {
    throw Error(ErrorCode::BadRunFile, path.string() + ": unsupported version " + std::to_string(version));
  }
  n_ = static_cast<unsigned char>(header[6]);
  m_ = get_le<int>(header.data() + 7, 2);
  declared_ = get_le<std::uint64_t>(header.data() + 9, 8);
}

std::optional<RunRecord> RunReader::next() {
  const auto truncated = [&] {
    return Error(ErrorCode::BadRunFile, path_.string() + ": truncated record " + std::to_string(read_));
  };
  std::string buf(3, '\0');
  if (!in_.read(buf.data(), 3)) {
    if (in_.gcount() != 0) throw truncated();
    if (read_ != declared_) {
      throw Error(ErrorCode::BadRunFile, path_.string() + ": header declares " + std::to_string(declared_) +
                                             " records, file holds " + std::to_string(read_));
    }
    return std::nullopt;
  }
  // Coefficients are length-prefixed; read them one at a time.
  const int n = static_cast<unsigned char>(buf[0]);
  for (int i = 0; i + 1 < n; ++i) {
    char head[2];
    if (!in_.read(head, 2)) throw truncated();
    buf.append(head, 2);
    const int len = static_cast<unsigned char>(head[1]);
    std::string mag(len, '\0');
    if (len > 0 && !in_.read(mag.data(), len)) throw truncated();
    buf += mag;
  }
  RunRecord rec;
  rec.fingerprint = PolyFingerprint::from_bytes(buf);
  if (rec.fingerprint.n() != n_ || rec.fingerprint.m() != m_) {
    throw Error(ErrorCode::ShardViolation, path_.string() + ": record outside the run's shard");
  }
  const int len = in_.get();
  if (len == std::char_traits<char>::eof()) throw truncated();
  rec.graph6.assign(static_cast<std::size_t>(len), '\0');
  if (len > 0 && !in_.read(rec.graph6.data(), len)) throw truncated();

  if (last_ && rec < *last_) {
    throw Error(ErrorCode::UnsortedRun, path_.string() + ": record " + std::to_string(read_) + " out of order");
  }
  last_ = rec;
  ++read_;
  return rec;
}

struct RunMerger::State {
  struct Head {
    RunRecord record;
    std::size_t run;
  };
  struct Later {
    bool operator()(const Head& a, const Head& b) const { return b.record < a.record; }
  };

  std::vector<RunReader> readers;
  std::priority_queue<Head, std::vector<Head>, Later> heap;

  void advance(std::size_t run) {
    if (auto r = readers[run].next()) heap.push({std::move(*r), run});
  }
};

RunMerger::RunMerger(const std::vector<std::filesystem::path>& paths) : state_(std::make_unique<State>()) {
  state_->readers.reserve(paths.size());
  for (const auto& p : paths) state_->readers.emplace_back(p);
  for (std::size_t i = 1; i < state_->readers.size(); ++i) {
    const RunReader& a = state_->readers.front();
    const RunReader& b = state_->readers[i];
    if (a.n() != b.n() || a.m() != b.m()) {
      throw Error(ErrorCode::ShardViolation, "runs " + paths.front().string() + " and " + paths[i].string() +
                                                 " belong to different shards");
    }
  }
  for (std::size_t i = 0; i < state_->readers.size(); ++i) state_->advance(i);
}

RunMerger::~RunMerger() = default;
RunMerger::RunMerger(RunMerger&&) noexcept = default;
RunMerger& RunMerger::operator=(RunMerger&&) noexcept = default;

std::optional<FamilyRecord> RunMerger::next() {
  auto& heap = state_->heap;
  if (heap.empty()) return std::nullopt;
  FamilyRecord family;
  family.fingerprint = heap.top().record.fingerprint;
  while (!heap.empty() && heap.top().record.fingerprint == family.fingerprint) {
    State::Head head = heap.top();
    heap.pop();
    if (!family.members.empty() && family.members.back() == head.record.graph6) {
      throw Error(ErrorCode::DuplicateMember, "graph " + head.record.graph6 + " appears twice in one shard");
    }
    family.members.push_back(std::move(head.record.graph6));
    state_->advance(head.run);
  }
  return family;
}

std::vector<FamilyRecord> merge_sorted_runs(const std::vector<std::filesystem::path>& paths) {
  RunMerger merger(paths);
  std::vector<FamilyRecord> out;
  while (auto f = merger.next()) out.push_back(std::move(*f));
  return out;
}

}  // namespace coperm
