package io2;

public class FileSink implements Sink {
    public void flush() {
    }

    public void drain() {
    }
}
