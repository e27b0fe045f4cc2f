package io2;

public interface Sink {
    void flush();

    void drain();
}
