#pragma once

#include <string>
#include <utility>
#include <vector>

#include "posefields/geometry.hpp"

namespace posefields {

enum class Visibility { absent, occluded, visible };

/// One joint of one person, in continuous input-image pixels.
struct Keypoint {
    double x = 0.0;
    double y = 0.0;
    Visibility vis = Visibility::absent;

    bool present() const { return vis != Visibility::absent; }
    Vec2 position() const { return {x, y}; }
};

/// Ground-truth joints of one person. joints.size() == spec.num_joints().
struct PoseInstance {
    std::vector<Keypoint> joints;

    int labeled_count() const {
        int n = 0;
        for (const auto& k : joints)
            if (k.present()) ++n;
        return n;
    }
};

/// All annotated persons of one image.
struct Scene {
    int image_id = 0;
    int width = 0;
    int height = 0;
    std::vector<PoseInstance> persons;
    /// Per-person object area in pixels^2 (segmentation or box area); used as
    /// the scale term of OKS. Aligned with `persons`; 0 means unknown.
    std::vector<double> person_areas;
};

/// Joint/limb taxonomy plus the per-joint constants the evaluator needs.
/// Immutable after construction; safe to share across threads.
struct SkeletonSpec {
    std::vector<std::string> joint_names;
    bool background_channel = true;
    std::vector<std::pair<int, int>> limbs;        // (parent joint, child joint)
    std::vector<std::pair<int, int>> mirror_pairs; // (left joint, right joint)
    std::vector<double> oks_kappa;                 // per-joint similarity constant

    int num_joints() const { return static_cast<int>(joint_names.size()); }
    int num_limbs() const { return static_cast<int>(limbs.size()); }
    int heatmap_channels() const { return num_joints() + (background_channel ? 1 : 0); }
    int offset_channels() const { return 2 * num_joints(); }
    int paf_channels() const { return 2 * num_limbs(); }

    /// Index of the left/right counterpart of joint j, or -1 if it has none.
    int mirror_of(int j) const {
        for (const auto& [l, r] : mirror_pairs) {
            if (l == j) return r;
            if (r == j) return l;
        }
        return -1;
    }

    /// Index of the limb whose endpoints mirror limb l's, or -1 if absent.
    int mirror_limb(int l) const {
        const int p = mirror_of(limbs[l].first);
        const int c = mirror_of(limbs[l].second);
        if (p < 0 || c < 0) return -1;
        for (int k = 0; k < num_limbs(); ++k)
            if (limbs[k].first == p && limbs[k].second == c) return k;
        return -1;
    }

    /// Throws ConfigError when limb indices are out of range, a limb is a
    /// self-loop, or mirror_pairs is not an involution.
    void validate() const;
};

/// 18-part body taxonomy (17 COCO keypoints plus a synthesized neck), 17
/// tree limbs, left/right mirror pairs and COCO-style OKS constants.
SkeletonSpec default_coco_skeleton();

} // namespace posefields
