#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tensorframe/fusion.hpp"
#include "tensorframe/groupframe.hpp"
#include "tensorframe/modframe.hpp"

namespace tensorframe::io {

using linalg::Complex;
using linalg::ComplexMatrix;

inline constexpr int kSchemaVersion = 1;

enum class DocumentKind { Frame, Fusion, Resolution, Group };

std::string_view to_string(DocumentKind kind);

struct GroupDescriptor {
  std::vector<std::size_t> cyclic_orders;
  /// Either one generator per cyclic factor or the full table; the other
  /// stays empty.
  std::vector<ComplexMatrix> generators;
  std::vector<ComplexMatrix> matrices;

  friend bool operator==(const GroupDescriptor&, const GroupDescriptor&) = default;
};

/// Parsed form of an input file.
///
/// frame:      block_dims, rank, vectors[vector][coordinate][block]
/// fusion:     rank = ambient dim, matrices = spanning sets, weights
/// resolution: rank = ambient dim, matrices = operators, weights
/// group:      rank = representation dim, group, candidates
struct FrameDocument {
  int version = kSchemaVersion;
  DocumentKind kind = DocumentKind::Frame;
  std::vector<std::size_t> block_dims{1};
  std::size_t rank = 0;
  std::vector<std::vector<std::vector<ComplexMatrix>>> vectors;
  std::vector<ComplexMatrix> matrices;
  std::vector<double> weights;
  std::optional<GroupDescriptor> group;
  std::vector<std::vector<Complex>> candidates;

  friend bool operator==(const FrameDocument&, const FrameDocument&) = default;
};

/// Throws ParseError for malformed JSON, unknown version or kind, and
/// ShapeMismatch for inconsistent shapes.
FrameDocument parse_document(std::string_view text);
FrameDocument load_document(const std::string& path);

std::string serialize_document(const FrameDocument& doc);

FrameDocument from_frame(const modframe::ModuleFrame& f);
modframe::ModuleFrame to_frame(const FrameDocument& doc);

FrameDocument from_fusion(const fusion::FusionFrame& f);
fusion::FusionFrame to_fusion(const FrameDocument& doc);

FrameDocument from_resolution(const fusion::OperatorFamily& r);
fusion::OperatorFamily to_resolution(const FrameDocument& doc);

FrameDocument from_group(const groupframe::GroupRepresentation& pi,
                         const std::vector<std::vector<Complex>>& candidates);
groupframe::GroupRepresentation to_representation(const FrameDocument& doc);

/// FNV-1a of the bytes, as 16 hex digits.
std::string digest(std::string_view bytes);

}  // namespace tensorframe::io
