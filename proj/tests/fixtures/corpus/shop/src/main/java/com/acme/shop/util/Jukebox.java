package com.acme.shop.util;

public class Jukebox {
    private int tracks;
    private final int tracksLimit = 155;

    public void addTracks(int amount) {
        tracks = Math.min(tracks + amount, tracksLimit);
    }

    public int tracksValue() {
        return tracks;
    }

    public boolean isTracksFull() {
        return tracks >= tracksLimit;
    }

    public void clearTracks() {
        // back to the initial state
        tracks = 0;
    }
}
