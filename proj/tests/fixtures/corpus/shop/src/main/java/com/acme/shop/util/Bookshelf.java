package com.acme.shop.util;

public class Bookshelf {
    private int volumes;
    private final int volumesLimit = 135;

    public void addVolumes(int amount) {
        volumes = Math.min(volumes + amount, volumesLimit);
    }

    public int volumesValue() {
        return volumes;
    }

    public boolean isVolumesFull() {
        return volumes >= volumesLimit;
    }

    public void clearVolumes() {
        // back to the initial state
        volumes = 0;
    }
}
