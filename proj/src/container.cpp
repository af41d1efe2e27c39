#include "udc/container.hpp"

#include <fstream>
#include <iterator>
#include <limits>

#include "udc/ecp_decoder.hpp"
#include "udc/error.hpp"

namespace udc {

namespace {

constexpr std::uint8_t kMagic[4] = {'U', 'D', 'C', '1'};

void put(std::vector<std::uint8_t>& out, std::uint64_t v, unsigned width) {
  for (unsigned i = 0; i < width; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

class Reader {
 public:
  explicit Reader(std::span<const std::uint8_t> b) : bytes_(b) {}

  std::uint64_t get(unsigned width) {
    need(width);
    std::uint64_t v = 0;
    for (unsigned i = 0; i < width; ++i) v |= static_cast<std::uint64_t>(bytes_[pos_ + i]) << (8 * i);
    pos_ += width;
    return v;
  }
  std::string text(std::size_t len) {
    need(len);
    std::string s(bytes_.begin() + static_cast<std::ptrdiff_t>(pos_),
                  bytes_.begin() + static_cast<std::ptrdiff_t>(pos_ + len));
    pos_ += len;
    return s;
  }
  std::size_t pos() const { return pos_; }

 private:
  void need(std::size_t k) const {
    if (bytes_.size() - pos_ < k) fail(ErrorCode::format, "container truncated");
  }
  std::span<const std::uint8_t> bytes_;
  std::size_t pos_ = 0;
};

void require_byte_field(const Field& f) {
  if (f.order() < 256) fail(ErrorCode::invalid_argument, "byte payloads need a field with at least 256 elements");
}

}  // namespace

std::vector<std::uint8_t> write_header(const ContainerHeader& h) {
  std::vector<std::uint8_t> out(std::begin(kMagic), std::end(kMagic));
  const std::string spec = to_string(h.code.field);
  if (spec.size() > 0xFFFF) fail(ErrorCode::invalid_argument, "field spec too long");
  put(out, spec.size(), 2);
  out.insert(out.end(), spec.begin(), spec.end());
  for (std::size_t v : {h.code.n, h.code.r, h.code.start, h.code.step}) {
    if (v > std::numeric_limits<std::uint32_t>::max()) fail(ErrorCode::invalid_argument, "code parameter too large");
    put(out, v, 4);
  }
  put(out, h.code.kind == SchemeKind::fourier ? 0 : 1, 1);
  put(out, h.payload_length, 8);
  put(out, h.symbol_width, 1);
  return out;
}

ContainerHeader read_header(std::span<const std::uint8_t> bytes, std::size_t* consumed) {
  Reader rd(bytes);
  for (std::uint8_t m : kMagic) {
    if (rd.get(1) != m) fail(ErrorCode::format, "bad container magic");
  }
  ContainerHeader h;
  const auto len = static_cast<std::size_t>(rd.get(2));
  try {
    h.code.field = parse_field_spec(rd.text(len));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::format) throw;
    fail(ErrorCode::format, std::string("container field spec: ") + e.what());
  }
  h.code.n = rd.get(4);
  h.code.r = rd.get(4);
  h.code.start = rd.get(4);
  h.code.step = rd.get(4);
  const auto kind = rd.get(1);
  if (kind > 1) fail(ErrorCode::format, "unknown scheme kind in container");
  h.code.kind = kind == 0 ? SchemeKind::fourier : SchemeKind::vandermonde;
  h.payload_length = rd.get(8);
  h.symbol_width = static_cast<unsigned>(rd.get(1));
  if (consumed) *consumed = rd.pos();
  return h;
}

std::vector<std::uint8_t> encode_container(const CodeDescriptor& desc, std::span<const std::uint8_t> payload) {
  const LinearCode code = make_code(desc);
  const Field& f = code.field();
  require_byte_field(f);
  if (!code.check_structure()) fail(ErrorCode::not_decodable, "container codes must be decodable");
  ContainerHeader h{describe(code), payload.size(), f.symbol_width()};
  std::vector<std::uint8_t> out = write_header(h);
  const std::size_t r = code.r();
  const std::size_t blocks = (payload.size() + r - 1) / r;
  out.reserve(out.size() + blocks * code.n() * h.symbol_width);
  Vector message(r);
  for (std::size_t b = 0; b < blocks; ++b) {
    for (std::size_t i = 0; i < r; ++i) {
      const std::size_t at = b * r + i;
      message[i] = at < payload.size() ? payload[at] : 0;
    }
    for (Symbol s : code.encode(message)) put(out, s, h.symbol_width);
  }
  return out;
}

namespace {

ContainerDecodeReport decode_body(std::span<const std::uint8_t> container, const ContainerHeader& h,
                                  std::size_t offset, bool best_effort) {
  const LinearCode code = make_code(h.code);
  const Field& f = code.field();
  require_byte_field(f);
  if (h.symbol_width != f.symbol_width()) fail(ErrorCode::format, "symbol width does not match the field");
  const std::size_t r = code.r();
  const std::size_t n = code.n();
  const std::size_t blocks = static_cast<std::size_t>((h.payload_length + r - 1) / r);
  const std::size_t block_bytes = n * h.symbol_width;
  if (container.size() - offset != blocks * block_bytes) fail(ErrorCode::format, "container body has wrong size");

  ContainerDecodeReport rep;
  rep.blocks = blocks;
  rep.payload.reserve(blocks * r);
  Reader rd(container.subspan(offset));
  Vector word(n);
  for (std::size_t b = 0; b < blocks; ++b) {
    for (auto& s : word) {
      s = rd.get(h.symbol_width);
      if (!f.contains(s)) s = 0;  // out-of-range symbols are certainly corrupted
    }
    const DecodeOutcome out = decode(code, word);
    bool ok = out.status != DecodeStatus::failure;
    if (ok) {
      for (Symbol m : out.message) ok = ok && m < 256;
    }
    Vector message;
    if (ok) {
      message = out.message;
      if (out.status == DecodeStatus::corrected) {
        ++rep.corrected_blocks;
        rep.corrected_symbols += out.error_count;
      }
    } else {
      if (!best_effort) {
        fail(ErrorCode::uncorrectable, "block " + std::to_string(b) + " has more errors than the code corrects");
      }
      rep.failed_blocks.push_back(b);
      message = linalg::vec_mat(f, word, code.recovery());
    }
    for (Symbol m : message) rep.payload.push_back(static_cast<std::uint8_t>(m));
  }
  rep.payload.resize(static_cast<std::size_t>(h.payload_length));
  return rep;
}

}  // namespace

ContainerDecodeReport decode_container(std::span<const std::uint8_t> container, bool best_effort) {
  std::size_t offset = 0;
  const ContainerHeader h = read_header(container, &offset);
  return decode_body(container, h, offset, best_effort);
}

ContainerDecodeReport decode_container(std::span<const std::uint8_t> container, const CodeDescriptor& expected,
                                       bool best_effort) {
  std::size_t offset = 0;
  const ContainerHeader h = read_header(container, &offset);
  if (!(h.code == expected)) {
    fail(ErrorCode::format, "container was written for " + to_string(h.code) + ", expected " + to_string(expected));
  }
  return decode_body(container, h, offset, best_effort);
}

std::vector<std::uint8_t> read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::io, "cannot open " + path.string());
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) fail(ErrorCode::io, "read error on " + path.string());
  return bytes;
}

void write_file(const std::filesystem::path& path, std::span<const std::uint8_t> bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(ErrorCode::io, "cannot create " + path.string());
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) fail(ErrorCode::io, "write error on " + path.string());
}

void encode_file(const std::filesystem::path& in, const std::filesystem::path& out, const CodeDescriptor& desc) {
  write_file(out, encode_container(desc, read_file(in)));
}

ContainerDecodeReport decode_file(const std::filesystem::path& in, const std::filesystem::path& out,
                                  bool best_effort) {
  ContainerDecodeReport rep = decode_container(read_file(in), best_effort);
  write_file(out, rep.payload);
  return rep;
}

}  // namespace udc
