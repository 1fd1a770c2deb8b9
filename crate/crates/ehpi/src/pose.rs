//! Core skeleton types shared by every pipeline stage.
//!
//! Coordinates use the pixel convention: `+x` right, `+y` down, origin at the
//! image's top-left corner. A skeleton always carries exactly 15 joints in a
//! fixed order; joints that were not detected are represented by a score of
//! zero rather than an optional slot, so fixed-size arrays flow through the
//! whole pipeline.

use thiserror::Error;

/// Number of joints in a skeleton. Also the row count of an encoded pose image.
pub const JOINT_COUNT: usize = 15;

/// Default minimum joint confidence for a joint to participate in tracking
/// or encoding.
pub const DEFAULT_MIN_JOINT_SCORE: f64 = 0.4;

#[derive(Debug, Error, PartialEq)]
pub enum PoseError {
    #[error("no joints with score >= {min_score}")]
    NoValidJoints { min_score: f64 },
}

/// The 15 tracked joints, in encoding order. The discriminant of each variant
/// is the row index it occupies in an encoded pose image.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[repr(u8)]
pub enum JointId {
    Nose = 0,
    Neck = 1,
    HipCenter = 2,
    LeftShoulder = 3,
    LeftElbow = 4,
    LeftWrist = 5,
    RightShoulder = 6,
    RightElbow = 7,
    RightWrist = 8,
    LeftHip = 9,
    LeftKnee = 10,
    LeftAnkle = 11,
    RightHip = 12,
    RightKnee = 13,
    RightAnkle = 14,
}

impl JointId {
    pub const ALL: [JointId; JOINT_COUNT] = [
        JointId::Nose,
        JointId::Neck,
        JointId::HipCenter,
        JointId::LeftShoulder,
        JointId::LeftElbow,
        JointId::LeftWrist,
        JointId::RightShoulder,
        JointId::RightElbow,
        JointId::RightWrist,
        JointId::LeftHip,
        JointId::LeftKnee,
        JointId::LeftAnkle,
        JointId::RightHip,
        JointId::RightKnee,
        JointId::RightAnkle,
    ];

    /// Row index of this joint in an encoded pose image.
    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(index: usize) -> Option<JointId> {
        JointId::ALL.get(index).copied()
    }

    /// The left/right mirror partner of this joint. Nose, neck, and hip
    /// center mirror to themselves.
    pub fn mirror(self) -> JointId {
        match self {
            JointId::Nose => JointId::Nose,
            JointId::Neck => JointId::Neck,
            JointId::HipCenter => JointId::HipCenter,
            JointId::LeftShoulder => JointId::RightShoulder,
            JointId::LeftElbow => JointId::RightElbow,
            JointId::LeftWrist => JointId::RightWrist,
            JointId::RightShoulder => JointId::LeftShoulder,
            JointId::RightElbow => JointId::LeftElbow,
            JointId::RightWrist => JointId::LeftWrist,
            JointId::LeftHip => JointId::RightHip,
            JointId::LeftKnee => JointId::RightKnee,
            JointId::LeftAnkle => JointId::RightAnkle,
            JointId::RightHip => JointId::LeftHip,
            JointId::RightKnee => JointId::LeftKnee,
            JointId::RightAnkle => JointId::LeftAnkle,
        }
    }
}

/// One joint estimate: image position plus detection confidence in `[0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Keypoint2D {
    pub x: f64,
    pub y: f64,
    pub score: f64,
}

impl Keypoint2D {
    pub fn new(x: f64, y: f64, score: f64) -> Self {
        Keypoint2D { x, y, score }
    }

    /// A joint that was not detected at all.
    pub fn absent() -> Self {
        Keypoint2D::default()
    }
}

/// One person's pose estimate in one frame: exactly 15 joints indexed by
/// [`JointId`]. Absent joints carry score 0.
#[derive(Debug, Clone, PartialEq)]
pub struct Skeleton {
    pub joints: [Keypoint2D; JOINT_COUNT],
}

impl Skeleton {
    pub fn new(joints: [Keypoint2D; JOINT_COUNT]) -> Self {
        Skeleton { joints }
    }

    /// A skeleton with every joint absent.
    pub fn empty() -> Self {
        Skeleton {
            joints: [Keypoint2D::absent(); JOINT_COUNT],
        }
    }

    pub fn joint(&self, id: JointId) -> &Keypoint2D {
        &self.joints[id.index()]
    }

    pub fn joint_mut(&mut self, id: JointId) -> &mut Keypoint2D {
        &mut self.joints[id.index()]
    }

    /// Mean of all 15 joint scores (absent joints count as zero).
    /// Used to rank competing detections of the same person.
    pub fn pose_score(&self) -> f64 {
        self.joints.iter().map(|j| j.score).sum::<f64>() / JOINT_COUNT as f64
    }

    /// Tight axis-aligned bounding box over all joints with
    /// `score >= min_score`.
    pub fn bbox(&self, min_score: f64) -> Result<BBox, PoseError> {
        let mut bbox: Option<BBox> = None;
        for joint in &self.joints {
            if joint.score < min_score {
                continue;
            }
            bbox = Some(match bbox {
                None => BBox::new(joint.x, joint.y, joint.x, joint.y),
                Some(b) => BBox::new(
                    b.x_min.min(joint.x),
                    b.y_min.min(joint.y),
                    b.x_max.max(joint.x),
                    b.y_max.max(joint.y),
                ),
            });
        }
        bbox.ok_or(PoseError::NoValidJoints { min_score })
    }
}

/// Axis-aligned box in pixel coordinates.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BBox {
    pub x_min: f64,
    pub y_min: f64,
    pub x_max: f64,
    pub y_max: f64,
}

impl BBox {
    pub fn new(x_min: f64, y_min: f64, x_max: f64, y_max: f64) -> Self {
        debug_assert!(x_max >= x_min && y_max >= y_min);
        BBox {
            x_min,
            y_min,
            x_max,
            y_max,
        }
    }

    pub fn width(&self) -> f64 {
        self.x_max - self.x_min
    }

    pub fn height(&self) -> f64 {
        self.y_max - self.y_min
    }

    pub fn diagonal(&self) -> f64 {
        let (w, h) = (self.width(), self.height());
        (w * w + h * h).sqrt()
    }
}

/// Whether a track's skeleton for the current frame came from a fresh
/// detection or was carried forward by propagation only.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TrackOrigin {
    Detected,
    Tracked,
}

/// A skeleton bound to a persistent track identifier.
#[derive(Debug, Clone, PartialEq)]
pub struct TrackedHuman {
    pub track_id: u64,
    pub skeleton: Skeleton,
    pub bbox: BBox,
    pub origin: TrackOrigin,
    /// Consecutive frames this track has survived without a supporting
    /// detection. Zero whenever the current skeleton came from a detection.
    pub age_frames: u32,
}
