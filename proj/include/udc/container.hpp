#pragma once

// Block container for byte payloads.
//
//   "UDC1"                      magic
//   u16  len, len bytes         field spec text
//   u32  n, r, start, step
//   u8   kind                   0 = fourier, 1 = vandermonde
//   u64  payload length
//   u8   symbol width
//   blocks of n symbols, each `width` bytes little-endian
//
// Integers are little-endian. Every block carries r payload bytes as message
// symbols; the last block is zero-padded.

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "udc/unit_scheme.hpp"

namespace udc {

struct ContainerHeader {
  CodeDescriptor code;
  std::uint64_t payload_length = 0;
  unsigned symbol_width = 1;

  bool operator==(const ContainerHeader&) const = default;
};

std::vector<std::uint8_t> write_header(const ContainerHeader& h);
/// Parses the header; `consumed` receives its byte length.
ContainerHeader read_header(std::span<const std::uint8_t> bytes, std::size_t* consumed = nullptr);

struct ContainerDecodeReport {
  std::vector<std::uint8_t> payload;
  std::size_t blocks = 0;
  std::size_t corrected_blocks = 0;
  std::size_t corrected_symbols = 0;
  std::vector<std::size_t> failed_blocks;
};

std::vector<std::uint8_t> encode_container(const CodeDescriptor& desc, std::span<const std::uint8_t> payload);

/// Throws uncorrectable naming the first failed block unless best_effort, in
/// which case failed blocks are passed through uncorrected and listed.
ContainerDecodeReport decode_container(std::span<const std::uint8_t> container, bool best_effort = false);
/// As above, but refuses a container built for a different code.
ContainerDecodeReport decode_container(std::span<const std::uint8_t> container, const CodeDescriptor& expected,
                                       bool best_effort = false);

std::vector<std::uint8_t> read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::span<const std::uint8_t> bytes);

void encode_file(const std::filesystem::path& in, const std::filesystem::path& out, const CodeDescriptor& desc);
ContainerDecodeReport decode_file(const std::filesystem::path& in, const std::filesystem::path& out,
                                  bool best_effort = false);

}  // namespace udc
