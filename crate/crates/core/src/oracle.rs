// Copyright 2026 Lindchain Contributors
// SPDX-License-Identifier: Apache-2.0

//! Placeholder.
